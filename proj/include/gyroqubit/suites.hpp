#pragma once

// Named verification suites. Each check states the identity or inequality it
// evaluates; tolerances come from TrialConfig (tol_rel, tol_abs) or are fixed
// where the property carries its own precision target.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gyroqubit/harness.hpp"

namespace gyroqubit {

namespace suites {

using V = BlochVector<double>;
using VL = BlochVector<long double>;
using H = Hermitian2<double>;
using HL = Hermitian2<long double>;
using D = DensityMatrix<double>;
using X2 = Complex2x2<double>;

inline const char* kLongDouble = "long double";

/// Haar-random element of SU(2) from four standard normals.
inline X2 random_unitary(SplitMix64& r) {
  const auto [a, b] = r.normal_pair();
  const auto [c, d] = r.normal_pair();
  std::complex<double> p(a, b), q(c, d);
  const double n = std::sqrt(std::norm(p) + std::norm(q));
  p /= n;
  q /= n;
  return {{p, -std::conj(q), q, std::conj(p)}};
}

/// U diag(s, s/c) W with c log-uniform in [1, max_cond] and s = e^{U(-1,1)}.
inline X2 random_factor(SplitMix64& r, double max_cond = 1e3) {
  const auto u = random_unitary(r);
  const auto w = random_unitary(r);
  const double c = std::pow(10.0, r.uniform(0.0, std::log10(max_cond)));
  const double s = std::exp(r.uniform(-1.0, 1.0));
  return u * X2{{s, 0.0, 0.0, s / c}} * w;
}

/// Cone point: density matrix congruence-scaled by sqrt(s) U, s = e^{U(-3,3)}.
inline H cone_point(SplitMix64& r, const V& bloch) {
  const double s = std::exp(r.uniform(-3.0, 3.0));
  return s * congruence(random_unitary(r), D{bloch}.matrix());
}

inline Complex2x2<long double> widen(const X2& x) {
  Complex2x2<long double> w;
  for (int i = 0; i < 4; ++i) w.m[i] = std::complex<long double>(x.m[i].real(), x.m[i].imag());
  return w;
}

inline json to_json_factor(const X2& x) {
  json j = json::array();
  for (const auto& e : x.m) j.push_back({e.real(), e.imag()});
  return j;
}

inline double max_abs(const H& a, const H& b) { return max_abs_diff(a, b); }

class Sampler {
 public:
  explicit Sampler(const TrialConfig& cfg) : cap_(cfg.radius_cap), frac_(cfg.boundary_fraction) {}
  V operator()(SplitMix64& r) const { return sample_stratified(r, cap_, frac_); }

 private:
  double cap_;
  double frac_;
};

inline SuiteReport axioms(const TrialConfig& cfg) {
  Suite s("axioms", cfg);
  const double tr = cfg.tol_rel;
  const auto g1 = s.check("G1_identity", tr);
  const auto g2 = s.check("G2_inverse", tr);
  const auto g3 = s.check("G3_gyroassociativity", tr);
  const auto g4 = s.check("G4_gyr_of_identity", tr);
  const auto g5 = s.check("G5_loop_property", tr);
  const auto gcomm = s.check("gyrocommutativity", tr);
  const auto two = s.check("unique_2_divisibility", tr);
  const auto orth = s.check("gyration_orthogonality", 1e-11);
  const auto det = s.check("gyration_determinant", 1e-11);
  const auto inner = s.check("gyration_preserves_inner_product", tr);
  const auto normal = s.check("gyration_fixes_plane_normal", tr);
  const auto boosts = s.check("gyration_matches_boost_composition", tr);
  const auto absorb = s.check("closed_ball_absorption", 0.0);
  const auto noinv = s.check("closed_ball_no_inverse", cfg.tol_abs);
  const auto interior = s.check("closed_ball_interior_consistency", cfg.tol_abs);
  const Sampler ball(cfg);
  const auto id = Rotation3<double>::identity();

  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V a = ball(r), b = ball(r), c = ball(r);
    auto wit = [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}; };
    const V zero{};

    t.record(g1, std::max(residual(einstein_add(zero, a), a), residual(einstein_add(a, zero), a)), wit);
    t.record(g2, std::max(einstein_add(a, -a).norm(), einstein_add(-a, a).norm()), wit);

    const auto ab = einstein_add(a, b);
    const auto gab = gyration(a, b);
    t.record(g3, residual(einstein_add(ab, gab.apply(c)), einstein_add(a, einstein_add(b, c))), wit);
    t.record(g4, max_abs_diff(gyration(zero, a), id), wit);
    t.record(g5, max_abs_diff(gyration(ab, b), gab), wit);
    t.record(gcomm, residual(gab.apply(einstein_add(b, a)), ab), wit);

    const auto half = scalar_mul(0.5, b);
    t.record(two, residual(einstein_add(half, half), b), wit);

    t.record(orth, max_abs_diff(gab.transpose() * gab, id), wit);
    t.record(det, std::abs(gab.det() - 1.0), wit);
    t.record(inner, residual(gab.apply(c).dot(gab.apply(a)), c.dot(a)), wit);
    const auto n = a.cross(b);
    t.record(normal, residual(gab.apply(n), n), wit);
    t.record(boosts, max_abs_diff(gyration_from_boosts(a, b), gab), wit);

    // Unit-norm left operand: absorbs every right operand, antipode included,
    // so no right operand can produce the identity.
    const V u = sample_direction(r);
    const V w = r.uniform(0.0, 1.0) < 0.25 ? -u : sample_ball(r, 1.0);
    const auto uw = einstein_add_closed(u, w);
    auto wit_closed = [&] { return json{{"u", to_json(u)}, {"w", to_json(w)}}; };
    t.record(absorb, (uw - u).norm(), wit_closed);
    t.record(noinv, std::abs(uw.norm() - 1.0), wit_closed);
    t.record(interior, residual(einstein_add_closed(a, b), ab), wit);
  });
  return s.finish();
}

inline SuiteReport isomorphism(const TrialConfig& cfg) {
  Suite s("isomorphism", cfg);
  const double tr = cfg.tol_rel;
  const double ta = cfg.tol_abs;
  const auto iso = s.check("odot_equals_rho_of_einstein_sum", ta);
  const auto inv = s.check("inverse_state_is_rho_of_negation", 0.0);
  const auto inv_matrix = s.check("det_times_inverse_is_rho_of_negation", ta);
  const auto sq = s.check("sqrt_density_squares_to_state", 1e-13);
  const auto sq_spec = s.check("sqrt_density_matches_spectral_sqrt", ta);
  const auto spec = s.check("spectrum_formula_matches_eigensolver", 1e-13);
  const auto det = s.check("determinant_is_quarter_inverse_gamma_squared", tr);
  const auto tp = s.check("trace_product_matches_matrix_trace", 1e-14);
  const auto star = s.check("congruence_trace_is_trace_product", ta);
  const auto dg1 = s.check("D_G1_identity", ta);
  const auto dg2 = s.check("D_G2_inverse", ta);
  const auto dg3 = s.check("D_G3_gyroassociativity", tr);
  const auto dg5 = s.check("D_G5_loop_property", tr);
  const auto dgc = s.check("D_gyrocommutativity", tr);
  const Sampler ball(cfg);
  const D half_identity = D::maximally_mixed();

  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V a = ball(r), b = ball(r), c = ball(r);
    const D ra{a}, rb{b}, rc{c};
    auto wit = [&] { return json{{"u", to_json(a)}, {"v", to_json(b)}, {"w", to_json(c)}}; };

    const auto ab = odot(ra, rb);
    t.record(iso, max_abs(ab.matrix(), from_bloch(einstein_add(a, b)).matrix()), wit);
    t.record(inv, inverse_state(ra) == from_bloch(-a) ? 0.0 : 1.0, wit);
    t.record(inv_matrix, max_abs(inverse_state_matrix(ra), D{-a}.matrix()), wit);

    const auto root = sqrt_density(ra);
    t.record(sq, max_abs(congruence(root, H::identity()), ra.matrix()), wit);
    t.record(sq_spec, max_abs(root, sqrtm(ra.matrix())), wit);

    const auto sp = spectrum(ra);
    const auto eig = eig_h2(ra.matrix());
    t.record(spec, std::max(std::abs(sp.lambda_plus - eig.lambda1), std::abs(sp.lambda_minus - eig.lambda2)), wit);
    const double g = gamma(a);
    t.record(det, residual(sp.det, 1.0 / (4.0 * g * g)), wit);

    const double tp_formula = trace_product(ra, rb);
    t.record(tp, std::abs(tp_formula - trace_of_product(ra.matrix(), rb.matrix())), wit);
    t.record(star, std::abs(congruence(root, rb.matrix()).trace() - tp_formula), wit);

    t.record(dg1,
             std::max(max_abs(odot(half_identity, ra).matrix(), ra.matrix()),
                      max_abs(odot(ra, half_identity).matrix(), ra.matrix())),
             wit);
    const auto ia = inverse_state(ra);
    t.record(dg2,
             std::max(max_abs(odot(ra, ia).matrix(), half_identity.matrix()),
                      max_abs(odot(ia, ra).matrix(), half_identity.matrix())),
             wit);

    // Gyrations act on D through the Bloch vectors.
    const auto gab = gyration(a, b);
    const D gc{gab.apply(c)};
    t.record(dg3, max_abs(odot(ra, odot(rb, rc)).matrix(), odot(ab, gc).matrix()), wit);
    t.record(dg5, max_abs_diff(gyration(ab.bloch, b), gab), wit);
    t.record(dgc, max_abs(ab.matrix(), D{gab.apply(odot(rb, ra).bloch)}.matrix()), wit);
  });
  return s.finish();
}

inline SuiteReport metric_lemma(const TrialConfig& cfg) {
  Suite s("metric_lemma", cfg);
  const double tr = cfg.tol_rel;
  const auto nonneg = s.check("nonnegativity", 0.0);
  const auto coincide = s.check("indiscernibles_coincident_pairs", 1e-9);
  const auto separate = s.check("indiscernibles_separated_pairs", 0.0);
  const auto sym_rho = s.check("symmetry_gyrometric", tr);
  const auto sym_d = s.check("symmetry_rapidity", tr);
  const auto gyrotri = s.check("gyrotriangle_norm", tr);
  const auto tri_d = s.check("triangle_rapidity", tr);
  const auto tri_rho = s.check("gyrotriangle_gyrometric", tr);
  const auto left_rho = s.check("left_invariance_gyrometric", tr);
  const auto left_d = s.check("left_invariance_rapidity", tr);
  const auto homog = s.check("homogeneity", tr, kLongDouble);
  const Sampler ball(cfg);

  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r), v = ball(r), w = ball(r);
    auto wit = [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}}; };

    const double rho_uv = gyrometric(u, v), rho_vu = gyrometric(v, u);
    const double d_uv = rapidity_metric(u, v), d_vu = rapidity_metric(v, u);
    t.record(nonneg, std::max({0.0, -rho_uv, -d_uv}), wit);

    t.record(coincide, std::max(gyrometric(u, u), rapidity_metric(u, u)), wit);
    // A nearby point at Euclidean distance in [1e-8, 1e-4], scaled back inside
    // the sampling cap when needed.
    V near = u + std::pow(10.0, r.uniform(-8.0, -4.0)) * sample_direction(r);
    if (near.norm() > cfg.radius_cap) near = (cfg.radius_cap / near.norm()) * near;
    double separated = 0.0;
    for (const V& x : {v, near}) {
      if ((u - x).norm() >= 1e-10) {
        separated = std::max(separated, 1e-9 - std::min(gyrometric(u, x), rapidity_metric(u, x)));
      }
    }
    t.record(separate, std::max(0.0, separated), [&] { return json{{"u", to_json(u)}, {"near", to_json(near)}}; });

    t.record(sym_rho, residual(rho_uv, rho_vu), wit);
    t.record(sym_d, residual(d_uv, d_vu), wit);

    t.record(gyrotri, excess(einstein_add(u, v).norm(), restricted_add(u.norm(), v.norm())), wit);
    t.record(tri_d, excess(rapidity_metric(u, w), d_uv + rapidity_metric(v, w)), wit);
    t.record(tri_rho, excess(gyrometric(u, w), restricted_add(rho_uv, gyrometric(v, w))), wit);

    const auto uv = einstein_add(u, v), uw = einstein_add(u, w);
    t.record(left_rho, residual(gyrometric(uv, uw), gyrometric(v, w)), wit);
    t.record(left_d, residual(rapidity_metric(uv, uw), rapidity_metric(v, w)), wit);

    const long double k = r.uniform(-3.0, 3.0);
    const VL wl = w.cast<long double>();
    const VL origin{};
    t.record(homog, residual(rapidity_metric(origin, scalar_mul(k, wl)), std::abs(k) * rapidity_metric(origin, wl)),
             [&] { return json{{"w", to_json(w)}, {"r", double(k)}}; });
  });
  return s.finish();
}

inline SuiteReport trace_lemma(const TrialConfig& cfg) {
  Suite s("trace_lemma", cfg);
  const auto cong_d = s.check("congruence_invariance_density", 1e-10, kLongDouble);
  const auto cong_c = s.check("congruence_invariance_cone", 1e-10, kLongDouble);
  const auto forms_d = s.check("closed_forms_agree_density", 1e-10);
  const auto forms_c = s.check("closed_forms_agree_cone", 1e-10);
  const auto forms_x = s.check("closed_forms_agree_congruence_scaled", 1e-10, kLongDouble);
  const auto root_d = s.check("sqrt_contraction_density", cfg.tol_abs);
  const auto root_c = s.check("sqrt_contraction_cone", cfg.tol_abs);
  const Sampler ball(cfg);

  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r), v = ball(r);
    const H A = D{u}.matrix(), B = D{v}.matrix();
    const H Ac = cone_point(r, u), Bc = cone_point(r, v);
    const X2 X = random_factor(r);

    auto wit = [&] {
      return json{{"u", to_json(u)}, {"v", to_json(v)}, {"A_cone", to_json(Ac)}, {"B_cone", to_json(Bc)},
                  {"X", to_json_factor(X)}};
    };

    const auto XL = widen(X);
    for (const auto& [check, P, Q] : {std::tuple{cong_d, A, B}, std::tuple{cong_c, Ac, Bc}}) {
      const HL PL = P.template cast<long double>(), QL = Q.template cast<long double>();
      t.record(check, residual(trace_metric(congruence(XL, PL), congruence(XL, QL)), trace_metric(PL, QL)), wit);
    }

    t.record(forms_d, residual(trace_metric_via_product(A, B), trace_metric(A, B)), wit);
    t.record(forms_c, residual(trace_metric_via_product(Ac, Bc), trace_metric(Ac, Bc)), wit);
    {
      const HL PL = congruence(XL, A.cast<long double>()), QL = congruence(XL, B.cast<long double>());
      t.record(forms_x, residual(trace_metric_via_product(PL, QL), trace_metric(PL, QL)), wit);
    }

    t.record(root_d, excess_abs(trace_metric(sqrtm(A), sqrtm(B)), 0.5 * trace_metric(A, B)), wit);
    t.record(root_c, excess_abs(trace_metric(sqrtm(Ac), sqrtm(Bc)), 0.5 * trace_metric(Ac, Bc)), wit);
  });
  return s.finish();
}

inline SuiteReport bounds(const TrialConfig& cfg) {
  Suite s("bounds", cfg);
  const double tr = cfg.tol_rel;
  const double ta = cfg.tol_abs;
  const auto bound_holds = s.check("determinant_bound_holds", ta);
  const auto bound_sym = s.check("determinant_bound_symmetric", tr);
  const auto bound_eq = s.check("determinant_bound_coincident_constant", tr);
  const auto sqrt2_rapidity = s.check("sqrt2_rapidity_below_trace", ta);
  const auto base_formula = s.check("origin_case_formula", tr);
  const auto base_ineq = s.check("origin_case_inequality", ta);
  const auto base_diff = s.check("origin_case_at_left_difference", ta);
  const auto left_d = s.check("rapidity_left_translation_to_origin", tr);
  const auto ratio_pair = s.observe("ratio_trace_over_sqrt2_rapidity");
  const auto ratio_base = s.observe("ratio_base_case");
  const auto left_gap = s.observe("trace_metric_left_translation_gap");
  const Sampler ball(cfg);
  const D half_identity = D::maximally_mixed();
  const double sqrt2 = std::numbers::sqrt2;

  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r), v = ball(r);
    const D ru{u}, rv{v};
    auto wit = [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}}; };

    const double delta = trace_metric(ru.matrix(), rv.matrix());
    const double bound = prop_bound(u, v);
    t.record(bound_holds, excess_abs(delta, bound), wit);
    t.record(bound_sym, residual(prop_bound(v, u), bound), wit);
    t.record(bound_eq,
             std::max(residual(prop_bound(u, u), sqrt2 * std::numbers::ln2),
                      trace_metric(ru.matrix(), ru.matrix())),
             wit);

    const double d = rapidity_metric(u, v);
    t.record(sqrt2_rapidity, excess_abs(sqrt2 * d, delta), wit);

    const double n = u.norm();
    const double base = trace_metric(half_identity.matrix(), ru.matrix());
    const double l1 = std::log1p(n), l2 = std::log1p(-n);
    t.record(base_formula, residual(base * base, l1 * l1 + l2 * l2), wit);
    t.record(base_ineq, excess_abs(sqrt2 * std::atanh(n), base), wit);

    // Left translation by -u carries the pair (u, v) to (0, w).
    const V w = einstein_add(-u, v);
    const double base_w = trace_metric(half_identity.matrix(), D{w}.matrix());
    const double d_w = rapidity_metric(V{}, w);
    t.record(base_diff, excess_abs(sqrt2 * d_w, base_w), wit);
    t.record(left_d, residual(d, d_w), wit);

    if (d > 1e-6) t.record(ratio_pair, delta / (sqrt2 * d), wit);
    if (d_w > 1e-6) t.record(ratio_base, base_w / (sqrt2 * d_w), wit);
    t.record(left_gap, std::abs(delta - base_w), wit);
  });
  return s.finish();
}

inline SuiteReport gamma_identity(const TrialConfig& cfg) {
  Suite s("gamma_identity", cfg);
  const auto ident = s.check("gamma_of_sum", cfg.tol_rel);
  const auto closed = s.check("gamma_definition", cfg.tol_rel);
  const Sampler ball(cfg);
  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r), v = ball(r);
    auto wit = [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}}; };
    t.record(ident, residual(gamma(einstein_add(u, v)), gamma(u) * gamma(v) * (1.0 + u.dot(v))), wit);
    t.record(closed, residual(gamma(u), 1.0 / std::sqrt(1.0 - u.norm2())), wit);
  });
  return s.finish();
}

inline SuiteReport boost(const TrialConfig& cfg) {
  Suite s("boost", cfg);
  const auto sum = s.check("boost_extracted_sum", cfg.tol_abs);
  const auto time = s.check("boost_time_component", cfg.tol_abs);
  const auto sym = s.check("boost_symmetric", 0.0);
  TrialConfig capped = cfg;
  capped.radius_cap = std::min(cfg.radius_cap, 0.9);
  const Sampler ball(capped);
  s.notes()["radius_cap"] = capped.radius_cap;
  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r), v = ball(r);
    auto wit = [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}}; };
    const auto [time_part, added] = boost_add(u, v);
    t.record(sum, residual(added, einstein_add(u, v)), wit);
    t.record(time, residual(time_part, gamma(u) * (1.0 + u.dot(v))), wit);
    const auto b = lorentz_boost(u);
    double asym = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) asym = std::max(asym, std::abs(b(i, j) - b(j, i)));
    t.record(sym, asym, wit);
  });
  return s.finish();
}

inline SuiteReport pathlength(const TrialConfig& cfg) {
  Suite s("pathlength", cfg);
  const auto geo = s.check("geodesic_length_equals_trace_metric", 1e-6);
  const auto pert = s.check("perturbed_path_not_shorter", 1e-9);
  const auto speed = s.check("geodesic_constant_speed", 1e-10);
  const Sampler ball(cfg);
  constexpr int kSegments = 1024;
  s.notes()["segments"] = kSegments;
  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r), v = ball(r);
    const H A = D{u}.matrix(), B = D{v}.matrix();
    auto wit = [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}}; };
    const double delta = trace_metric(A, B);
    t.record(geo, residual(path_length(PathSampler<double>::geodesic(A, B, kSegments)), delta), wit);
    t.record(pert, excess_abs(delta, path_length(PathSampler<double>::perturbed(A, B, kSegments))), wit);
    const double s1 = r.uniform(0.0, 1.0), s2 = r.uniform(0.0, 1.0);
    const Geodesic<double> g(A, B);
    t.record(speed, residual(trace_metric(g.at(s1), g.at(s2)), std::abs(s1 - s2) * delta),
             [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}, {"s", s1}, {"t", s2}}; });
  });
  return s.finish();
}

inline SuiteReport erratum(const TrialConfig& cfg) {
  Suite s("erratum", cfg);
  const auto corrected = s.check("corrected_coefficient_gives_inverse_state", cfg.tol_abs);
  const auto corrected_trace = s.check("corrected_coefficient_trace_one", cfg.tol_abs);
  const auto printed_trace = s.check("printed_coefficient_trace_is_gamma", cfg.tol_rel);
  const auto witness = s.check("printed_trace_at_norm_0.6", 1e-12);
  const Sampler ball(cfg);

  const D fixed{V{0.0, 0.0, 0.6}};
  const auto printed = inverse_state_matrix(fixed, InverseFormula::Printed);
  const auto fixed_corrected = inverse_state_matrix(fixed, InverseFormula::Corrected);
  s.notes() = {{"u", to_json(fixed.bloch)},
               {"printed_matrix", to_json(printed)},
               {"printed_trace", printed.trace()},
               {"corrected_matrix", to_json(fixed_corrected)},
               {"corrected_trace", fixed_corrected.trace()},
               {"corrected_bloch", to_json(to_bloch(fixed_corrected))}};

  s.run(cfg.trials, [&](SplitMix64& r, TrialScope& t) {
    const V u = ball(r);
    const D ru{u};
    auto wit = [&] { return json{{"u", to_json(u)}}; };
    const auto c = inverse_state_matrix(ru, InverseFormula::Corrected);
    t.record(corrected, max_abs(c, D{-u}.matrix()), wit);
    t.record(corrected_trace, std::abs(c.trace() - 1.0), wit);
    t.record(printed_trace, residual(inverse_state_matrix(ru, InverseFormula::Printed).trace(), gamma(u)), wit);
    // Any direction with norm 0.6: gamma = 1.25.
    const V u6 = 0.6 * sample_direction(r);
    t.record(witness, std::abs(inverse_state_matrix(D{u6}, InverseFormula::Printed).trace() - 1.25),
             [&] { return json{{"u", to_json(u6)}}; });
  });
  return s.finish();
}

}  // namespace suites

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"axioms", "isomorphism", "metric_lemma", "trace_lemma", "bounds",
                                            "gamma_identity", "boost", "pathlength", "erratum"};
  return ids;
}

/// Runs every suite and returns their reports followed by a summary report
/// with suite_id "all".
inline std::vector<SuiteReport> run_all(const TrialConfig& cfg);

/// Runs one suite; "all" returns the summary of every suite.
inline SuiteReport run_suite(std::string_view id, const TrialConfig& cfg) {
  cfg.validate();
  if (id == "axioms") return suites::axioms(cfg);
  if (id == "isomorphism") return suites::isomorphism(cfg);
  if (id == "metric_lemma") return suites::metric_lemma(cfg);
  if (id == "trace_lemma") return suites::trace_lemma(cfg);
  if (id == "bounds") return suites::bounds(cfg);
  if (id == "gamma_identity") return suites::gamma_identity(cfg);
  if (id == "boost") return suites::boost(cfg);
  if (id == "pathlength") return suites::pathlength(cfg);
  if (id == "erratum") return suites::erratum(cfg);
  if (id == "all") return run_all(cfg).back();
  throw UnknownSuite(std::string(id));
}

inline std::vector<SuiteReport> run_all(const TrialConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteReport> out;
  SuiteReport summary;
  summary.suite_id = "all";
  summary.seed = cfg.seed;
  json per_suite = json::array();
  double worst_severity = -1.0;
  for (const auto& id : suite_ids()) {
    out.push_back(run_suite(id, cfg));
    const auto& r = out.back();
    summary.trials_run += r.trials_run;
    summary.violations += r.violations;
    per_suite.push_back({{"suite", r.suite_id}, {"violations", r.violations}, {"worst_check", r.worst_check}});
    for (const auto& c : r.checks) {
      if (c.informational) continue;
      if (c.severity() > worst_severity) {
        worst_severity = c.severity();
        summary.max_residual = c.max_residual;
        summary.tolerance = c.tolerance;
        summary.worst_check = r.suite_id + "/" + c.name;
        summary.worst_witness = c.witness;
      }
    }
  }
  summary.notes = {{"suites", per_suite}};
  summary.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.push_back(std::move(summary));
  return out;
}

}  // namespace gyroqubit
