#pragma once

/**
 * @brief Registry of executable reverse-order-law statements for the core
 *        inverse under the Einstein product.
 *
 * Each law is data: a list of named residual conditions split into standing
 * hypotheses, a left-hand side, and a right-hand side. check_law evaluates
 * standing + lhs as hypotheses and rhs as the conclusion; check_law_reverse
 * swaps the sides for the equivalence laws. A hypothesis that cannot be
 * evaluated because some inverse does not exist (index above one, ambiguous
 * rank) reports an infinite residual instead of aborting, so falsification
 * searches always get a full report.
 *
 * Conclusions of the form "X is the core (or group) inverse of C" are checked
 * by plugging the candidate X into the defining equations of C rather than by
 * computing C's inverse and comparing, which keeps the check meaningful even
 * when C's inverse is what the law is asserting to exist.
 */

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "teinv/errors.hpp"
#include "teinv/gen_inverse.hpp"
#include "teinv/tensor.hpp"
#include "teinv/testkit.hpp"

namespace teinv {

/** @brief Stable identifiers of the checked reverse-order-law statements. */
enum class LawId {
  T3_1,
  C3_2,
  P3_NORMAL,
  T3_3,
  T3_4,
  T3_5,
  T3_6,
  C3_10,
  T3_11,
  C3_12,
  T4_1,
  T4_2,
  T4_3,
  T4_4,
  T_KRON,
  T_UNITARY_A,
  T_UNITARY_B,
};

inline const std::vector<LawId>& all_laws() {
  static const std::vector<LawId> ids = {
      LawId::T3_1,   LawId::C3_2,   LawId::P3_NORMAL, LawId::T3_3,      LawId::T3_4,
      LawId::T3_5,   LawId::T3_6,   LawId::C3_10,     LawId::T3_11,     LawId::C3_12,
      LawId::T4_1,   LawId::T4_2,   LawId::T4_3,      LawId::T4_4,      LawId::T_KRON,
      LawId::T_UNITARY_A, LawId::T_UNITARY_B,
  };
  return ids;
}

inline std::string to_string(LawId law) {
  switch (law) {
    case LawId::T3_1: return "T3_1";
    case LawId::C3_2: return "C3_2";
    case LawId::P3_NORMAL: return "P3_NORMAL";
    case LawId::T3_3: return "T3_3";
    case LawId::T3_4: return "T3_4";
    case LawId::T3_5: return "T3_5";
    case LawId::T3_6: return "T3_6";
    case LawId::C3_10: return "C3_10";
    case LawId::C3_12: return "C3_12";
    case LawId::T3_11: return "T3_11";
    case LawId::T4_1: return "T4_1";
    case LawId::T4_2: return "T4_2";
    case LawId::T4_3: return "T4_3";
    case LawId::T4_4: return "T4_4";
    case LawId::T_KRON: return "T_KRON";
    case LawId::T_UNITARY_A: return "T_UNITARY_A";
    case LawId::T_UNITARY_B: return "T_UNITARY_B";
  }
  throw UsageError("unknown law id");
}

inline LawId law_from_string(const std::string& name) {
  for (LawId law : all_laws())
    if (to_string(law) == name) return law;
  std::string known;
  for (LawId law : all_laws()) {
    if (!known.empty()) known += ", ";
    known += to_string(law);
  }
  throw UsageError("unknown law '" + name + "', expected one of: " + known);
}

/** @brief Number of input tensors the law quantifies over (1 or 2). */
inline int law_arity(LawId law) { return law == LawId::P3_NORMAL ? 1 : 2; }

/** @brief True for the equivalence laws, whose sides can be swapped. */
inline bool law_is_iff(LawId law) {
  switch (law) {
    case LawId::T3_3:
    case LawId::T3_6:
    case LawId::T4_1:
    case LawId::T4_2:
    case LawId::T4_3:
    case LawId::T4_4:
      return true;
    default:
      return false;
  }
}

/** @brief Tolerances for law checking; conclusions compose several inverses. */
struct LawOptions {
  InverseOptions inverse;
  double residual_tol = 1e-8;
};

/** @brief One named hypothesis or conclusion condition with its residual. */
struct ConditionReport {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

/** @brief Full evaluation record of one law on one input. */
struct LawReport {
  LawId law = LawId::T3_1;
  bool reversed = false;
  std::vector<ConditionReport> hypotheses;
  std::vector<ConditionReport> conclusions;
  double conclusion_residual = 0.0;
  bool hypotheses_pass = false;
  bool conclusion_pass = false;
  bool implication_ok = false;
};

namespace law_detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/**
 * @brief Lazily caches the derived tensors shared across a law's conditions.
 *
 * The products a*b and b*a are snapped to exact zero when their norm sits
 * within rounding noise of zero relative to the factor norms. Without the
 * snap, a product that vanishes exactly (disjoint spectral supports) computes
 * as noise of norm ~1e-16, whose relative-threshold rank is full, and every
 * inverse built on top of it turns into garbage of norm ~1e+17; the
 * mathematically correct report for such instances needs the exact zero.
 */
class Context {
 public:
  static constexpr double kProductNoiseFloor = 1e-13;

  Context(const DenseTensor& a, const DenseTensor* b, const LawOptions& opts)
      : a_(a), b_(b), opts_(opts) {}

  const LawOptions& opts() const { return opts_; }
  const DenseTensor& a() const { return a_; }
  const DenseTensor& b() const {
    if (!b_) throw UsageError("law condition needs a second tensor");
    return *b_;
  }

  const DenseTensor& ab() {
    return cached(ab_, [&] { return snapped_product(a(), b()); });
  }
  const DenseTensor& ba() {
    return cached(ba_, [&] { return snapped_product(b(), a()); });
  }
  const DenseTensor& core_a() {
    return cached(core_a_, [&] { return core_inverse(a(), opts_.inverse); });
  }
  const DenseTensor& core_b() {
    return cached(core_b_, [&] { return core_inverse(b(), opts_.inverse); });
  }
  const DenseTensor& group_a() {
    return cached(group_a_, [&] { return group_inverse(a(), opts_.inverse); });
  }
  const DenseTensor& id() {
    return cached(id_, [&] { return identity(a().shape().left_dims); });
  }

  bool index_is_one(const DenseTensor& t) { return index(t, opts_.inverse).k == 1; }

  double range_residual(const DenseTensor& outer, const DenseTensor& inner) {
    const Matrix proj = outer.matrix() * detail::pinv(outer.matrix(), opts_.inverse);
    return (proj * inner.matrix() - inner.matrix()).norm() / (1.0 + inner.matrix().norm());
  }

  double class_residual(const DenseTensor& c, const DenseTensor& x,
                        const std::vector<int>& equations) {
    double worst = 0.0;
    for (const EquationCheck& check : verify_inverse_class(c, x, equations, opts_.inverse))
      worst = std::max(worst, check.residual);
    return worst;
  }

 private:
  template <typename F>
  const DenseTensor& cached(std::optional<DenseTensor>& slot, F compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  DenseTensor snapped_product(const DenseTensor& x, const DenseTensor& y) const {
    DenseTensor p = x * y;
    if (norm_fro(p) <= kProductNoiseFloor * norm_fro(x) * norm_fro(y)) {
      return zero(p.shape());
    }
    return p;
  }

  const DenseTensor& a_;
  const DenseTensor* b_;
  LawOptions opts_;
  std::optional<DenseTensor> ab_, ba_, core_a_, core_b_, group_a_, id_;
};

struct Condition {
  std::string name;
  std::function<double(Context&)> eval;
};

struct LawSpec {
  LawId id;
  std::vector<Condition> standing;
  std::vector<Condition> lhs;
  std::vector<Condition> rhs;
};

inline Condition index_one_of(std::string name,
                              std::function<const DenseTensor&(Context&)> pick) {
  return {std::move(name),
          [pick](Context& c) { return c.index_is_one(pick(c)) ? 0.0 : kInf; }};
}

inline const std::vector<LawSpec>& registry() {
  static const std::vector<LawSpec> laws = [] {
    std::vector<LawSpec> r;
    auto ind_a = index_one_of("index(a) == 1", [](Context& c) -> const DenseTensor& {
      return c.a();
    });
    auto ind_b = index_one_of("index(b) == 1", [](Context& c) -> const DenseTensor& {
      return c.b();
    });
    auto ind_ab = index_one_of("index(a*b) == 1", [](Context& c) -> const DenseTensor& {
      return c.ab();
    });
    Condition rol{"coreinv(a*b) == coreinv(b)*coreinv(a)", [](Context& c) {
                    return c.class_residual(c.ab(), c.core_b() * c.core_a(), {3, 6, 7});
                  }};

    r.push_back(LawSpec{
        LawId::T3_1,
        {ind_a, ind_b, ind_ab},
        {{"a*b*coreinv(b) == b*coreinv(b)*a",
          [](Context& c) { return rel_dist(c.a() * c.b() * c.core_b(),
                                           c.b() * c.core_b() * c.a()); }},
         {"b*a*coreinv(a) == a*coreinv(a)*b",
          [](Context& c) { return rel_dist(c.b() * c.a() * c.core_a(),
                                           c.a() * c.core_a() * c.b()); }}},
        {rol}});

    r.push_back(LawSpec{
        LawId::C3_2,
        {ind_a, ind_b},
        {{"a*b == b*a", [](Context& c) { return rel_dist(c.ab(), c.ba()); }},
         {"conj_transpose(a)*b == b*conj_transpose(a)",
          [](Context& c) { return rel_dist(conj_transpose(c.a()) * c.b(),
                                           c.b() * conj_transpose(c.a())); }}},
        {rol}});

    r.push_back(LawSpec{
        LawId::P3_NORMAL,
        {ind_a},
        {{"a*conj_transpose(a) == conj_transpose(a)*a",
          [](Context& c) { return rel_dist(c.a() * conj_transpose(c.a()),
                                           conj_transpose(c.a()) * c.a()); }}},
        {{"a*coreinv(a) == coreinv(a)*a",
          [](Context& c) { return rel_dist(c.a() * c.core_a(), c.core_a() * c.a()); }}}});

    r.push_back(LawSpec{
        LawId::T3_3,
        {ind_a, ind_b, ind_ab},
        {{"range(a*coreinv(b)) within range(coreinv(b)*coreinv(a))",
          [](Context& c) {
            return c.range_residual(c.core_b() * c.core_a(), c.a() * c.core_b());
          }},
         {"conj_transpose(b)*groupinv(a)*(id - conj_transpose(a*b*coreinv(b)*coreinv(a)))*a "
          "== 0",
          [](Context& c) {
            DenseTensor inner = c.id() - conj_transpose(c.ab() * c.core_b() * c.core_a());
            DenseTensor e = conj_transpose(c.b()) * c.group_a() * inner * c.a();
            return norm_fro(e) / (1.0 + norm_fro(c.a()));
          }}},
        {rol}});

    r.push_back(LawSpec{
        LawId::T3_4,
        {ind_a, ind_b, ind_ab},
        {rol},
        {{"range(a*b) within range(b*a)",
          [](Context& c) { return c.range_residual(c.ba(), c.ab()); }},
         {"b*coreinv(b)*coreinv(a) is a {3,6}-inverse of a*b*coreinv(b)",
          [](Context& c) {
            return c.class_residual(c.ab() * c.core_b(),
                                    c.b() * c.core_b() * c.core_a(), {3, 6});
          }}}});

    r.push_back(LawSpec{
        LawId::T3_5,
        {ind_a, ind_b},
        {{"a*a == b*a", [](Context& c) { return rel_dist(c.a() * c.a(), c.ba()); }}},
        {ind_ab, rol,
         {"index(a*b*coreinv(b)) == 1",
          [](Context& c) { return c.index_is_one(c.ab() * c.core_b()) ? 0.0 : kInf; }},
         {"coreinv(a*b*coreinv(b)) == b*coreinv(b)*coreinv(a)",
          [](Context& c) {
            return c.class_residual(c.ab() * c.core_b(),
                                    c.b() * c.core_b() * c.core_a(), {3, 6, 7});
          }}}});

    r.push_back(LawSpec{
        LawId::T3_6,
        {ind_a, ind_b, ind_ab,
         {"range(conj_transpose(a)*b) == range(b*conj_transpose(a))",
          [](Context& c) {
            DenseTensor sb = conj_transpose(c.a()) * c.b();
            DenseTensor bs = c.b() * conj_transpose(c.a());
            return std::max(c.range_residual(sb, bs), c.range_residual(bs, sb));
          }}},
        {rol},
        {{"range(coreinv(b)*a) within range(a*b)",
          [](Context& c) { return c.range_residual(c.ab(), c.core_b() * c.a()); }},
         {"range(a*b) within range(b*a)",
          [](Context& c) { return c.range_residual(c.ba(), c.ab()); }},
         {"a*coreinv(a) commutes with b*coreinv(b)",
          [](Context& c) {
            DenseTensor pa = c.a() * c.core_a();
            DenseTensor pb = c.b() * c.core_b();
            return rel_dist(pa * pb, pb * pa);
          }}}});

    r.push_back(LawSpec{
        LawId::C3_10,
        {ind_a, ind_b,
         {"range(conj_transpose(a)*b) == range(b*conj_transpose(a))",
          [](Context& c) {
            DenseTensor sb = conj_transpose(c.a()) * c.b();
            DenseTensor bs = c.b() * conj_transpose(c.a());
            return std::max(c.range_residual(sb, bs), c.range_residual(bs, sb));
          }}},
        {rol},
        {{"coreinv(a*b*coreinv(b)) == b*coreinv(b)*coreinv(a)",
          [](Context& c) {
            return c.class_residual(c.ab() * c.core_b(),
                                    c.b() * c.core_b() * c.core_a(), {3, 6, 7});
          }},
         {"coreinv(b*coreinv(b))*coreinv(a) == b*coreinv(b)*coreinv(a)",
          [](Context& c) {
            DenseTensor proj = c.b() * c.core_b();
            DenseTensor lhs = core_inverse(proj, c.opts().inverse) * c.core_a();
            return rel_dist(lhs, proj * c.core_a());
          }}}});

    r.push_back(LawSpec{
        LawId::T3_11,
        {ind_a, ind_b,
         {"range(a) within range(a*b)",
          [](Context& c) { return c.range_residual(c.ab(), c.a()); }},
         {"a is EP",
          [](Context& c) { return is_ep(c.a(), c.opts().inverse) ? 0.0 : kInf; }}},
        {rol},
        {{"coreinv(conj_transpose(coreinv(a))*b) == coreinv(b)*conj_transpose(a)",
          [](Context& c) {
            DenseTensor target = conj_transpose(c.core_a()) * c.b();
            DenseTensor candidate = c.core_b() * conj_transpose(c.a());
            return c.class_residual(target, candidate, {3, 6, 7});
          }}}});

    r.push_back(LawSpec{
        LawId::C3_12,
        {ind_a, ind_b,
         {"range(a) within range(a*b)",
          [](Context& c) { return c.range_residual(c.ab(), c.a()); }},
         {"range(conj_transpose(b)) within range(conj_transpose(b)*conj_transpose(a))",
          [](Context& c) {
            return c.range_residual(conj_transpose(c.ab()), conj_transpose(c.b()));
          }},
         {"a is EP",
          [](Context& c) { return is_ep(c.a(), c.opts().inverse) ? 0.0 : kInf; }}},
        {rol},
        {{"coreinv(a*b*coreinv(b)) == b*coreinv(b)*coreinv(a)",
          [](Context& c) {
            return c.class_residual(c.ab() * c.core_b(),
                                    c.b() * c.core_b() * c.core_a(), {3, 6, 7});
          }}}});

    r.push_back(LawSpec{
        LawId::T4_1,
        {ind_b, ind_ab,
         {"index(a*b*coreinv(b)) == 1",
          [](Context& c) { return c.index_is_one(c.ab() * c.core_b()) ? 0.0 : kInf; }}},
        {{"coreinv(a*b) == groupinv(a*b) == coreinv(b)*coreinv(a*b*coreinv(b))",
          [](Context& c) {
            DenseTensor x =
                c.core_b() * core_inverse(c.ab() * c.core_b(), c.opts().inverse);
            return c.class_residual(c.ab(), x, {1, 2, 3, 5, 6, 7});
          }}},
        {{"coreinv(b)*coreinv(a*b*coreinv(b)) is a {5}-inverse of a*b",
          [](Context& c) {
            DenseTensor x =
                c.core_b() * core_inverse(c.ab() * c.core_b(), c.opts().inverse);
            return c.class_residual(c.ab(), x, {5});
          }},
         {"coreinv(b)*b*a*b == a*b",
          [](Context& c) { return rel_dist(c.core_b() * c.ba() * c.b(), c.ab()); }},
         {"b*coreinv(b)*a*b == a*b",
          [](Context& c) { return rel_dist(c.b() * c.core_b() * c.ab(), c.ab()); }},
         {"b*a*coreinv(a*b*coreinv(b)) == coreinv(a*b*coreinv(b))*a*b",
          [](Context& c) {
            DenseTensor k = core_inverse(c.ab() * c.core_b(), c.opts().inverse);
            return rel_dist(c.ba() * k, k * c.ab());
          }},
         {"coreinv(a*b*coreinv(b)) == b*groupinv(a*b)",
          [](Context& c) {
            DenseTensor k = core_inverse(c.ab() * c.core_b(), c.opts().inverse);
            return rel_dist(k, c.b() * group_inverse(c.ab(), c.opts().inverse));
          }}}});

    r.push_back(LawSpec{
        LawId::T4_2,
        {ind_a, ind_b},
        {{"b*groupinv(a*b) == coreinv(a)",
          [](Context& c) {
            return rel_dist(c.b() * group_inverse(c.ab(), c.opts().inverse), c.core_a());
          }}},
        {{"coreinv(a)*a*b == b*a*coreinv(a)",
          [](Context& c) {
            return rel_dist(c.core_a() * c.ab(), c.ba() * c.core_a());
          }},
         {"range(a) within range(a*b)",
          [](Context& c) { return c.range_residual(c.ab(), c.a()); }},
         {"groupinv(a*b) == coreinv(a*b) == coreinv(b)*coreinv(a)",
          [](Context& c) {
            return c.class_residual(c.ab(), c.core_b() * c.core_a(),
                                    {1, 2, 3, 5, 6, 7});
          }},
         {"range(a) within range(b)",
          [](Context& c) { return c.range_residual(c.b(), c.a()); }}}});

    r.push_back(LawSpec{
        LawId::T4_3,
        {ind_a},
        {{"b*coreinv(a*b) == coreinv(a)",
          [](Context& c) {
            return rel_dist(c.b() * core_inverse(c.ab(), c.opts().inverse), c.core_a());
          }}},
        {{"range(a) within range(b*a*b)",
          [](Context& c) { return c.range_residual(c.ba() * c.b(), c.a()); }}}});

    r.push_back(LawSpec{
        LawId::T4_4,
        {ind_a, ind_b},
        {{"groupinv(a*b) == coreinv(b)*coreinv(a)",
          [](Context& c) {
            return c.class_residual(c.ab(), c.core_b() * c.core_a(), {1, 2, 5});
          }},
         {"groupinv(b*a) == coreinv(a)*coreinv(b)",
          [](Context& c) {
            return c.class_residual(c.ba(), c.core_a() * c.core_b(), {1, 2, 5});
          }}},
        {{"coreinv(a)*a*b == b*a*coreinv(a)",
          [](Context& c) {
            return rel_dist(c.core_a() * c.ab(), c.ba() * c.core_a());
          }},
         {"coreinv(b)*b*a == a*b*coreinv(b)",
          [](Context& c) {
            return rel_dist(c.core_b() * c.ba(), c.ab() * c.core_b());
          }},
         {"a*coreinv(b)*coreinv(a) == coreinv(b)*coreinv(a)*a",
          [](Context& c) {
            DenseTensor x = c.core_b() * c.core_a();
            return rel_dist(c.a() * x, x * c.a());
          }}}});

    r.push_back(LawSpec{
        LawId::T_KRON,
        {ind_a, ind_b},
        {},
        {{"coreinv(kron(a,b)) == kron(coreinv(a),coreinv(b))",
          [](Context& c) {
            return c.class_residual(kron(c.a(), c.b()),
                                    kron(c.core_a(), c.core_b()), {3, 6, 7});
          }}}});

    r.push_back(LawSpec{
        LawId::T_UNITARY_A,
        {ind_a, ind_b, ind_ab},
        {{"a is unitary",
          [](Context& c) {
            return rel_dist(conj_transpose(c.a()) * c.a(), c.id());
          }},
         {"range(a) within range(b)",
          [](Context& c) { return c.range_residual(c.b(), c.a()); }}},
        {{"coreinv(a*b) == coreinv(b)*conj_transpose(a)",
          [](Context& c) {
            return c.class_residual(c.ab(), c.core_b() * conj_transpose(c.a()),
                                    {3, 6, 7});
          }}}});

    r.push_back(LawSpec{
        LawId::T_UNITARY_B,
        {ind_a, ind_b, ind_ab},
        {{"b is unitary",
          [](Context& c) {
            return rel_dist(conj_transpose(c.b()) * c.b(), c.id());
          }},
         {"range(conj_transpose(b)*coreinv(a)) within range(coreinv(a))",
          [](Context& c) {
            return c.range_residual(c.core_a(), conj_transpose(c.b()) * c.core_a());
          }}},
        {{"coreinv(a*b) == conj_transpose(b)*coreinv(a)",
          [](Context& c) {
            return c.class_residual(c.ab(), conj_transpose(c.b()) * c.core_a(),
                                    {3, 6, 7});
          }}}});

    return r;
  }();
  return laws;
}

inline const LawSpec& law_spec(LawId law) {
  for (const LawSpec& spec : registry())
    if (spec.id == law) return spec;
  throw UsageError("law " + to_string(law) + " is not registered");
}

inline ConditionReport run_condition(const Condition& cond, Context& ctx) {
  double residual = kInf;
  try {
    residual = cond.eval(ctx);
  } catch (const IndexTooHighError&) {
  } catch (const RankAmbiguousError&) {
  }
  return {cond.name, residual, residual <= ctx.opts().residual_tol};
}

inline LawReport evaluate(const LawSpec& spec, Context& ctx, bool reversed) {
  LawReport report;
  report.law = spec.id;
  report.reversed = reversed;
  report.hypotheses_pass = true;
  const std::vector<Condition>& hyp_side = reversed ? spec.rhs : spec.lhs;
  const std::vector<Condition>& concl_side = reversed ? spec.lhs : spec.rhs;
  for (const Condition& cond : spec.standing) {
    ConditionReport c = run_condition(cond, ctx);
    report.hypotheses_pass = report.hypotheses_pass && c.pass;
    report.hypotheses.push_back(std::move(c));
  }
  for (const Condition& cond : hyp_side) {
    ConditionReport c = run_condition(cond, ctx);
    report.hypotheses_pass = report.hypotheses_pass && c.pass;
    report.hypotheses.push_back(std::move(c));
  }
  report.conclusion_pass = true;
  for (const Condition& cond : concl_side) {
    ConditionReport c = run_condition(cond, ctx);
    report.conclusion_residual = std::max(report.conclusion_residual, c.residual);
    report.conclusion_pass = report.conclusion_pass && c.pass;
    report.conclusions.push_back(std::move(c));
  }
  report.implication_ok = !report.hypotheses_pass || report.conclusion_pass;
  return report;
}

inline void validate_shapes(LawId law, const DenseTensor& a, const DenseTensor* b) {
  if (!a.shape().square()) {
    throw ShapeMismatchError("law " + to_string(law) + " needs a square first tensor, got " +
                             a.shape().to_string());
  }
  if (law_arity(law) == 2) {
    if (!b) throw UsageError("law " + to_string(law) + " takes two tensors");
    if (!b->shape().square()) {
      throw ShapeMismatchError("law " + to_string(law) +
                               " needs a square second tensor, got " +
                               b->shape().to_string());
    }
    if (law != LawId::T_KRON && a.shape() != b->shape()) {
      throw ShapeMismatchError("law " + to_string(law) + " needs equal shapes, got " +
                               a.shape().to_string() + " and " + b->shape().to_string());
    }
  }
}

}  // namespace law_detail

/** @brief Evaluate a two-tensor law: standing + lhs as hypotheses, rhs as conclusion. */
inline LawReport check_law(LawId law, const DenseTensor& a, const DenseTensor& b,
                           const LawOptions& opts = {}) {
  if (law_arity(law) != 2) {
    throw UsageError("law " + to_string(law) + " takes one tensor");
  }
  law_detail::validate_shapes(law, a, &b);
  law_detail::Context ctx(a, &b, opts);
  return law_detail::evaluate(law_detail::law_spec(law), ctx, false);
}

/** @brief Evaluate a one-tensor law. */
inline LawReport check_law(LawId law, const DenseTensor& a, const LawOptions& opts = {}) {
  if (law_arity(law) != 1) {
    throw UsageError("law " + to_string(law) + " takes two tensors");
  }
  law_detail::validate_shapes(law, a, nullptr);
  law_detail::Context ctx(a, nullptr, opts);
  return law_detail::evaluate(law_detail::law_spec(law), ctx, false);
}

/** @brief Evaluate an equivalence law in the reverse direction (rhs ⇒ lhs). */
inline LawReport check_law_reverse(LawId law, const DenseTensor& a, const DenseTensor& b,
                                   const LawOptions& opts = {}) {
  if (!law_is_iff(law)) {
    throw UsageError("law " + to_string(law) + " is not an equivalence; only " +
                     "T3_3, T3_6, T4_1, T4_2, T4_3, T4_4 can be reversed");
  }
  law_detail::validate_shapes(law, a, &b);
  law_detail::Context ctx(a, &b, opts);
  return law_detail::evaluate(law_detail::law_spec(law), ctx, true);
}

/**
 * @brief Deterministic hypothesis-satisfying instance for a law.
 *
 * The families are chosen so that standing and lhs conditions of the law hold
 * by construction: commuting polynomial pairs for the commutation-style laws,
 * support-constrained variants where range inclusions are required, the exact
 * B * A = A^2 family for T3_5, and dedicated unitary block constructions for
 * the unitary laws.
 */
inline testkit::Generated generate_law_pair(LawId law, const TensorShape& shape,
                                            std::uint64_t seed) {
  using testkit::Family;
  using testkit::GeneratorSpec;
  using testkit::SupportPattern;
  const TensorShape s = shape.normalized();
  constexpr std::uint64_t kDecorrelate = 0xD1B54A32D192ED03ULL;

  switch (law) {
    case LawId::P3_NORMAL:
      return testkit::generate({s, Family::EP, seed});
    case LawId::T3_5:
      return testkit::generate({s, Family::SquareCondition, seed});
    case LawId::T3_11:
    case LawId::T4_2:
    case LawId::T4_3: {
      GeneratorSpec spec{s, Family::CommutingPolyPair, seed};
      spec.pattern = SupportPattern::SecondInvertible;
      return testkit::generate(spec);
    }
    case LawId::C3_12: {
      GeneratorSpec spec{s, Family::CommutingPolyPair, seed};
      spec.pattern = SupportPattern::Equal;
      return testkit::generate(spec);
    }
    case LawId::T_KRON: {
      TensorShape sa, sb;
      if (s.left_dims.size() >= 2) {
        sa = TensorShape{{s.left_dims.front()}, {s.left_dims.front()}};
        std::vector<std::size_t> rest(s.left_dims.begin() + 1, s.left_dims.end());
        sb = TensorShape{rest, rest};
      } else {
        sa = s;
        sb = TensorShape{{2}, {2}};
      }
      DenseTensor a = testkit::generate({sa, Family::Index1, seed}).a;
      DenseTensor b = testkit::generate({sb, Family::Index1, seed ^ kDecorrelate}).a;
      return {std::move(a), std::move(b)};
    }
    case LawId::T_UNITARY_A: {
      DenseTensor a = testkit::generate({s, Family::Unitary, seed}).a;
      GeneratorSpec inv{s, Family::Index1, seed ^ kDecorrelate};
      inv.rank = s.left_size();
      DenseTensor b = testkit::generate(inv).a;
      return {std::move(a), std::move(b)};
    }
    case LawId::T_UNITARY_B: {
      testkit::Rng rng(seed);
      const std::size_t n = s.left_size();
      const std::size_t r = n == 1 ? 1 : rng.uniform_index(1, n - 1);
      const auto ri = static_cast<Eigen::Index>(r);
      const auto ni = static_cast<Eigen::Index>(n);
      const Matrix v = testkit::random_unitary(rng, n);
      Matrix am = Matrix::Zero(ni, ni);
      am.topLeftCorner(ri, ri) = testkit::random_invertible(rng, r);
      Matrix bm = Matrix::Zero(ni, ni);
      bm.topLeftCorner(ri, ri) = testkit::random_unitary(rng, r);
      if (n > r) {
        am.topRightCorner(ri, ni - ri) = testkit::random_matrix(rng, r, n - r);
        bm.bottomRightCorner(ni - ri, ni - ri) = testkit::random_unitary(rng, n - r);
      }
      return {DenseTensor::from_matrix(s, v * am * v.adjoint()),
              DenseTensor::from_matrix(s, v * bm * v.adjoint())};
    }
    default:
      return testkit::generate({s, Family::CommutingPolyPair, seed});
  }
}

/**
 * @brief Evaluate a law on trials generated instances, returning only the
 *        reports that violate the implication. Per-trial seed is gen.seed
 *        plus the trial number, so runs are reproducible and mergeable.
 */
inline std::vector<LawReport> counterexample_search(LawId law,
                                                    const testkit::GeneratorSpec& gen,
                                                    int trials,
                                                    const LawOptions& opts = {}) {
  if (trials < 1) throw UsageError("counterexample search needs trials >= 1");
  constexpr std::uint64_t kDecorrelate = 0xD1B54A32D192ED03ULL;
  std::vector<LawReport> violations;
  for (int t = 0; t < trials; ++t) {
    testkit::GeneratorSpec spec = gen;
    spec.seed = gen.seed + static_cast<std::uint64_t>(t);
    testkit::Generated g = testkit::generate(spec);
    LawReport report;
    if (law_arity(law) == 1) {
      report = check_law(law, g.a, opts);
    } else if (g.b) {
      report = check_law(law, g.a, *g.b, opts);
    } else {
      testkit::GeneratorSpec other = spec;
      other.seed = spec.seed ^ kDecorrelate;
      report = check_law(law, g.a, testkit::generate(other).a, opts);
    }
    if (!report.implication_ok) violations.push_back(std::move(report));
  }
  return violations;
}

namespace law_detail {

inline void append_json_number(std::ostringstream& os, double v) {
  if (std::isinf(v)) {
    os << "\"inf\"";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

inline void append_condition_json(std::ostringstream& os, const ConditionReport& c) {
  os << "{\"name\":\"" << c.name << "\",\"residual\":";
  append_json_number(os, c.residual);
  os << ",\"pass\":" << (c.pass ? "true" : "false") << "}";
}

}  // namespace law_detail

/** @brief Compact JSON rendering of a report for the CLI. */
inline std::string law_report_to_json(const LawReport& report) {
  std::ostringstream os;
  os << "{\"law\":\"" << to_string(report.law) << "\"";
  os << ",\"reversed\":" << (report.reversed ? "true" : "false");
  os << ",\"hypotheses\":[";
  for (std::size_t i = 0; i < report.hypotheses.size(); ++i) {
    if (i) os << ",";
    law_detail::append_condition_json(os, report.hypotheses[i]);
  }
  os << "],\"conclusions\":[";
  for (std::size_t i = 0; i < report.conclusions.size(); ++i) {
    if (i) os << ",";
    law_detail::append_condition_json(os, report.conclusions[i]);
  }
  os << "],\"hypotheses_pass\":" << (report.hypotheses_pass ? "true" : "false");
  os << ",\"conclusion_residual\":";
  law_detail::append_json_number(os, report.conclusion_residual);
  os << ",\"conclusion_pass\":" << (report.conclusion_pass ? "true" : "false");
  os << ",\"implication_ok\":" << (report.implication_ok ? "true" : "false");
  os << "}";
  return os.str();
}

}  // namespace teinv
