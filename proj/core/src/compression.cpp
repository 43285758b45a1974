#include "opinfo/compression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "internal.hpp"
#include "typeclass.hpp"

namespace opinfo {

namespace {

void require_materializable(const SystemLabel& label, const char* what) {
  if (label.dim() > kMaxMaterializedDim) {
    throw UnsupportedFeature(std::string(what) + ": " + label.to_string() + " is too large to build explicitly");
  }
}

int int_pow(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > (1LL << 30)) throw UnsupportedFeature("block dimension overflow");
  }
  return static_cast<int>(v);
}

// Sequence indices 0..d^N-1 (first factor most significant) sorted by
// probability, ties in lexicographic order.
std::vector<int> sequences_by_probability(const Vec& p, int N) {
  const int d = static_cast<int>(p.size());
  const int total = int_pow(d, N);
  std::vector<double> prob(static_cast<size_t>(total));
  std::vector<int> counts(static_cast<size_t>(d));
  for (int x = 0; x < total; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    int rest = x;
    for (int k = 0; k < N; ++k) {
      ++counts[static_cast<size_t>(rest % d)];
      rest /= d;
    }
    prob[static_cast<size_t>(x)] = static_cast<double>(detail::sequence_probability(p, counts));
  }
  std::vector<int> order(static_cast<size_t>(total));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return prob[static_cast<size_t>(a)] > prob[static_cast<size_t>(b)]; });
  return order;
}

void require_same_source(const CompressionScheme& s, const SystemLabel& system) {
  if (!(system == s.encoder.in)) (void)system.strip_prefix(s.encoder.in);  // throws unless A^N leads
}

StateVec deviation(const ChannelMat& c, const StateVec& psi) { return apply_local(c, psi) - psi; }

}  // namespace

SystemLabel block_system(const SystemLabel& a, int n) {
  if (n < 0) throw DimensionError("negative block length");
  return n == 0 ? SystemLabel::trivial() : SystemLabel::power(a, n);
}

StateVec tensor_power(const StateVec& s, int n) {
  StateVec out{SystemLabel::trivial(), Vec::Ones(1)};
  for (int i = 0; i < n; ++i) out = compose_par(out, s);
  return out;
}

ChannelMat tensor_power(const ChannelMat& c, int n) {
  ChannelMat out = identity_channel(SystemLabel::trivial());
  for (int i = 0; i < n; ++i) out = compose_par(out, c);
  return out;
}

void CompressionScheme::validate() const {
  if (!(encoder.in == block_system(source, N)) || !(decoder.out == encoder.in)) {
    throw ValidationError("scheme: encoder/decoder do not act on A^N");
  }
  if (!(encoder.out == block_system(obit, M)) || !(decoder.in == encoder.out)) {
    throw ValidationError("scheme: code system is not B^M");
  }
  const auto e = validate_channel(encoder);
  const auto d = validate_channel(decoder);
  if (!e.valid || !e.deterministic) throw ValidationError("scheme: encoder is not a deterministic channel: " + e.message);
  if (!d.valid || !d.deterministic) throw ValidationError("scheme: decoder is not a deterministic channel: " + d.message);
}

std::string to_string(FomCriterion c) {
  switch (c) {
    case FomCriterion::ensemble: return "ensemble";
    case FomCriterion::pure: return "pure";
    case FomCriterion::dilation: return "dilation";
    case FomCriterion::fidelity: return "fidelity";
    case FomCriterion::classical_error: return "classical_error";
  }
  return "ensemble";
}

double ensemble_fom(const CompressionScheme& s, const Ensemble& ens) {
  require_same_source(s, ens.system);
  const ChannelMat c = s.round_trip();
  double total = 0.0;
  for (const auto& m : ens.members) total += op_norm(deviation(c, m));
  return total;
}

double pure_fom(const CompressionScheme& s, std::span<const Ensemble> pure_decompositions) {
  double best = 0.0;
  for (const auto& e : pure_decompositions) best = std::max(best, ensemble_fom(s, e));
  return best;
}

double dilation_fom(const CompressionScheme& s, std::span<const DilationState> dilations) {
  const ChannelMat c = s.round_trip();
  double best = 0.0;
  for (const auto& d : dilations) best = std::max(best, op_norm(deviation(c, d.joint)));
  return best;
}

double fidelity_fom(const CompressionScheme& s, std::span<const DilationState> dilations, const SearchConfig& cfg) {
  const ChannelMat c = s.round_trip();
  double best = 1.0;
  for (const auto& d : dilations) best = std::min(best, dilation_fidelity(d, c, cfg));
  return best;
}

std::vector<DilationState> fom_dilations(const StateVec& rho, int n, const FomSampling& cfg) {
  const StateVec block = tensor_power(rho, n);
  require_materializable(block.system, "fom_dilations");
  DilationSampling ds = cfg.dilations;
  ds.seed = cfg.dilations.seed ^ (static_cast<std::uint64_t>(n) << 20);
  return sample_dilations(block, ds);
}

namespace {

std::vector<std::pair<std::string, std::string>> family_metadata(const FomSampling& cfg, size_t dilations,
                                                                 size_t decompositions) {
  return {{"dilations", std::to_string(dilations)},
          {"decompositions", std::to_string(decompositions)},
          {"max_ancilla", std::to_string(cfg.dilations.max_ancilla)},
          {"dilation_seed", std::to_string(cfg.dilations.seed)},
          {"decomposition_seed", std::to_string(cfg.seed)}};
}

}  // namespace

FoMReport pure_fom(const CompressionScheme& s, const StateVec& rho, const FomSampling& cfg) {
  const auto dils = fom_dilations(rho, s.N, cfg);
  std::vector<Ensemble> decs;
  for (size_t i = 0; i < dils.size(); ++i) {
    for (auto& e : pure_decompositions(dils[i].joint, cfg.decompositions, cfg.seed + i)) decs.push_back(std::move(e));
  }
  return {FomCriterion::pure, pure_fom(s, decs), BoundDirection::lower, family_metadata(cfg, dils.size(), decs.size())};
}

FoMReport dilation_fom(const CompressionScheme& s, const StateVec& rho, const FomSampling& cfg) {
  const auto dils = fom_dilations(rho, s.N, cfg);
  return {FomCriterion::dilation, dilation_fom(s, dils), BoundDirection::lower, family_metadata(cfg, dils.size(), 0)};
}

FoMReport fidelity_fom(const CompressionScheme& s, const StateVec& rho, const FomSampling& cfg) {
  if (rho.system.all_quantum()) {
    const StateVec block = tensor_power(rho, s.N);
    const std::vector<DilationState> canon{canonical_dilation(block)};
    return {FomCriterion::fidelity, fidelity_fom(s, canon, cfg.search), BoundDirection::exact,
            {{"dilations", "1"}, {"family", "canonical purification"}}};
  }
  const auto dils = fom_dilations(rho, s.N, cfg);
  return {FomCriterion::fidelity, fidelity_fom(s, dils, cfg.search), BoundDirection::upper,
          family_metadata(cfg, dils.size(), 0)};
}

ErrorProbability classical_error_prob(const Mat& c, const Vec& p) {
  if (c.rows() != c.cols() || c.cols() != p.size()) throw DimensionError("classical_error_prob: shape mismatch");
  if (c.size() && c.minCoeff() < -1e-12) throw ValidationError("classical_error_prob: negative entries");
  if (c.size() && c.colwise().sum().maxCoeff() > 1.0 + 1e-12) {
    throw ValidationError("classical_error_prob: column sums exceed 1");
  }
  ErrorProbability e;
  double kept = 0.0;
  double norm = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    kept += c(i, i) * p(i);
    Vec col = c.col(i);
    col(i) -= 1.0;
    norm += p(i) * col.lpNorm<1>();
  }
  e.value = 1.0 - kept;
  e.norm_form = 0.5 * norm;
  return e;
}

ErrorProbability classical_error_prob(const CompressionScheme& s, const Vec& p) {
  if (!s.source.all_classical()) throw DimensionError("classical_error_prob: classical schemes only");
  const StateVec block = tensor_power(StateVec{s.source, p}, s.N);
  return classical_error_prob(s.round_trip().matrix, block.coords);
}

CompressionScheme typical_set_scheme(const Vec& p, int N, int M) {
  if (M < 0) throw ValidationError("typical_set_scheme: M must be >= 0");
  if (N < 1) throw ValidationError("typical_set_scheme: N must be >= 1");
  const int d = static_cast<int>(p.size());
  const SystemLabel a = SystemLabel::classical(d);
  const SystemLabel bit = SystemLabel::classical(2);
  const SystemLabel in = block_system(a, N);
  const SystemLabel code = block_system(bit, M);
  require_materializable(in, "typical_set_scheme");
  require_materializable(code, "typical_set_scheme");
  const auto order = sequences_by_probability(p, N);
  const int slots = code.dim();
  const int kept = std::min(slots, in.dim());
  Mat enc = Mat::Zero(code.dim(), in.dim());
  Mat dec = Mat::Zero(in.dim(), code.dim());
  for (int r = 0; r < in.dim(); ++r) enc(r < kept ? r : 0, order[static_cast<size_t>(r)]) = 1.0;
  for (int r = 0; r < code.dim(); ++r) dec(order[static_cast<size_t>(r < kept ? r : 0)], r) = 1.0;
  return {{in, code, enc, true}, {code, in, dec, true}, N, M, a, bit};
}

double typical_set_error(const Vec& p, int N, int M) {
  if (M < 0) throw ValidationError("typical_set_error: M must be >= 0");
  if (N < 1) throw ValidationError("typical_set_error: N must be >= 1");
  return static_cast<double>(detail::excluded_mass(p, N, M, false));
}

double typical_mass(const Vec& eigs, int N, int M, Selection selection) {
  if (M < 0) throw ValidationError("typical_mass: M must be >= 0");
  if (M > static_cast<int>(std::ceil(N * std::log2(static_cast<double>(eigs.size())) - 1e-9))) {
    throw ValidationError("typical_mass: M exceeds the block size");
  }
  const long double out = detail::excluded_mass(eigs, N, M, selection == Selection::whole_classes);
  return static_cast<double>(std::clamp(1.0L - out, 0.0L, 1.0L));
}

CompressionScheme typical_subspace_scheme(const StateVec& rho, int N, int M) {
  if (!rho.system.all_quantum() || !rho.system.is_atomic()) throw DimensionError("typical_subspace_scheme: quantum source");
  if (M < 0 || M > max_code_length(rho.system, N)) throw ValidationError("typical_subspace_scheme: M out of range");
  const int d = rho.system.hilbert_dim();
  const SystemLabel qubit = SystemLabel::quantum(2);
  const SystemLabel in = block_system(rho.system, N);
  const SystemLabel code = block_system(qubit, M);
  require_materializable(in, "typical_subspace_scheme");
  require_materializable(code, "typical_subspace_scheme");

  const auto eig = hermitian_eigen(density_matrix(rho));
  Vec lambda(d);
  CMat vecs(d, d);
  for (int k = 0; k < d; ++k) {
    lambda(k) = std::max(0.0, eig.values(d - 1 - k));
    vecs.col(k) = eig.vectors.col(d - 1 - k);
  }
  const auto order = sequences_by_probability(lambda, N);
  const int dn = int_pow(d, N);
  const int slots = int_pow(2, M);
  const int kept = std::min(slots, dn);
  auto product_vector = [&](int x) {
    CVec v = CVec::Ones(1);
    int rest = x;
    std::vector<int> digits(static_cast<size_t>(N));
    for (int k = N - 1; k >= 0; --k) {
      digits[static_cast<size_t>(k)] = rest % d;
      rest /= d;
    }
    for (int k = 0; k < N; ++k) {
      const CVec col = vecs.col(digits[static_cast<size_t>(k)]);
      CVec next(v.size() * d);
      for (long i = 0; i < v.size(); ++i) next.segment(i * d, d) = v(i) * col;
      v = next;
    }
    return v;
  };
  const CVec phi0 = product_vector(order.front());
  if (M == 0) {
    Mat enc = unit_effect(in).coords.transpose();
    Mat dec = detail::to_coords(in, phi0 * phi0.adjoint());
    return {{in, code, enc, true}, {code, in, dec, true}, N, M, rho.system, qubit};
  }
  CMat v = CMat::Zero(slots, dn);
  for (int r = 0; r < kept; ++r) v.row(r) = product_vector(order[static_cast<size_t>(r)]).adjoint();
  std::vector<CMat> enc_kraus{v};
  for (int r = kept; r < dn; ++r) {
    CMat k = CMat::Zero(slots, dn);
    k.row(0) = product_vector(order[static_cast<size_t>(r)]).adjoint();
    enc_kraus.push_back(k);
  }
  std::vector<CMat> dec_kraus{v.adjoint()};
  for (int r = kept; r < slots; ++r) {
    CMat k = CMat::Zero(dn, slots);
    k.col(r) = phi0;
    dec_kraus.push_back(k);
  }
  ChannelMat enc = kraus_channel(in, code, enc_kraus);
  ChannelMat dec = kraus_channel(code, in, dec_kraus);
  enc.deterministic = dec.deterministic = true;
  return {enc, dec, N, M, rho.system, qubit};
}

CompressionScheme measure_prepare_scheme(const StateVec& phi, int N) {
  if (N < 1) throw ValidationError("measure_prepare_scheme: N must be >= 1");
  if (!phi.system.is_atomic()) throw DimensionError("measure_prepare_scheme: atomic source expected");
  const auto model = model_for(phi.system);
  if (!model->is_pure(phi)) throw ValidationError("measure_prepare_scheme: phi must be pure");
  const StateVec block = tensor_power(phi, N);
  const SystemLabel trivial = SystemLabel::trivial();
  Mat enc = unit_effect(block.system).coords.transpose();
  Mat dec = block.coords;
  return {{block.system, trivial, enc, true}, {trivial, block.system, dec, true}, N, 0, phi.system, model->obit()};
}

CompressionScheme product_scheme(const CompressionScheme& s1, const CompressionScheme& s2) {
  if (s1.N != s2.N) throw DimensionError("product_scheme: block lengths differ");
  CompressionScheme out{compose_par(s1.encoder, s2.encoder),
                        compose_par(s1.decoder, s2.decoder),
                        s1.N,
                        s1.M + s2.M,
                        SystemLabel::compose(s1.source, s2.source),
                        s1.obit};
  return out;
}

CompressionScheme conjugate_scheme(const CompressionScheme& s, const ChannelMat& u, const ChannelMat& u_inv) {
  if (!(u.in == s.source) || !(u.out == s.source) || !(u_inv.in == s.source) || !(u_inv.out == s.source)) {
    throw DimensionError("conjugate_scheme: reversible channel must act on the source system");
  }
  const Mat prod = u_inv.matrix * u.matrix;
  if ((prod - Mat::Identity(prod.rows(), prod.cols())).cwiseAbs().maxCoeff() > 1e-9) {
    throw ValidationError("conjugate_scheme: supplied inverse does not invert the channel");
  }
  const ChannelMat un = tensor_power(u, s.N);
  const ChannelMat un_inv = tensor_power(u_inv, s.N);
  CompressionScheme out = s;
  out.encoder = compose_seq(un, s.encoder);
  out.decoder = compose_seq(s.decoder, un_inv);
  return out;
}

CompressionScheme random_scheme(const SystemLabel& source, int N, int M, std::mt19937_64& rng) {
  if (M < 1) throw ValidationError("random_scheme: M must be >= 1");
  if (!source.is_atomic() || !(source.all_classical() || source.all_quantum())) {
    throw UnsupportedFeature("random_scheme: atomic classical or quantum source expected");
  }
  const SystemLabel obit = source.all_quantum() ? SystemLabel::quantum(2) : SystemLabel::classical(2);
  const SystemLabel in = block_system(source, N);
  const SystemLabel code = block_system(obit, M);
  require_materializable(in, "random_scheme");
  require_materializable(code, "random_scheme");
  ChannelMat enc = random_channel(in, code, rng);
  ChannelMat dec = random_channel(code, in, rng);
  return {enc, dec, N, M, source, obit};
}

}  // namespace opinfo
