#include "kcont/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kcont/qmap.hpp"

namespace kcont {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kExponentTol = 1e-12;

bool nearly_equal(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}
}  // namespace

GFunction GFunction::constant(double g0) {
  GFunction g;
  g.family_ = Family::Constant;
  g.g0_ = g0;
  return g;
}

GFunction GFunction::saturating(double alpha, double beta) {
  GFunction g;
  g.family_ = Family::Saturating;
  g.alpha_ = alpha;
  g.beta_ = beta;
  return g;
}

GFunction GFunction::decaying(double alpha) {
  GFunction g;
  g.family_ = Family::Decaying;
  g.alpha_ = alpha;
  return g;
}

GFunction GFunction::table(std::vector<std::pair<double, double>> knots) {
  GFunction g;
  g.family_ = Family::TableLinear;
  g.knots_ = std::move(knots);
  return g;
}

double GFunction::eval(double s) const {
  if (s < 0.0) throw std::domain_error("GFunction::eval: s < 0");
  switch (family_) {
    case Family::Constant:
      return g0_;
    case Family::Saturating:
      return alpha_ + beta_ * s / (1.0 + s);
    case Family::Decaying:
      return alpha_ / (1.0 + s);
    case Family::TableLinear: {
      if (knots_.empty()) throw std::logic_error("GFunction: empty knot table");
      if (s <= knots_.front().first) return knots_.front().second;
      if (s >= knots_.back().first) return knots_.back().second;
      for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
        const auto& [s0, v0] = knots_[k];
        const auto& [s1, v1] = knots_[k + 1];
        if (s <= s1) return v0 + (v1 - v0) * (s - s0) / (s1 - s0);
      }
      return knots_.back().second;
    }
  }
  return 0.0;
}

double GFunction::derivative(double s) const {
  if (s < 0.0) throw std::domain_error("GFunction::derivative: s < 0");
  switch (family_) {
    case Family::Constant:
      return 0.0;
    case Family::Saturating:
      return beta_ / ((1.0 + s) * (1.0 + s));
    case Family::Decaying:
      return -alpha_ / ((1.0 + s) * (1.0 + s));
    case Family::TableLinear: {
      if (s < knots_.front().first || s >= knots_.back().first) return 0.0;
      for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
        const auto& [s0, v0] = knots_[k];
        const auto& [s1, v1] = knots_[k + 1];
        if (s >= s0 && s < s1) return (v1 - v0) / (s1 - s0);
      }
      return 0.0;
    }
  }
  return 0.0;
}

bool GFunction::Range::contains(double t) const {
  if (t < lo || t > hi) return false;
  if (t == lo && !lo_closed) return false;
  if (t == hi && !hi_closed) return false;
  return true;
}

std::string GFunction::Range::str() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
  return os.str();
}

GFunction::Range GFunction::range() const {
  switch (family_) {
    case Family::Constant:
      return {g0_, g0_, true, true};
    case Family::Saturating:
      if (beta_ == 0.0) return {alpha_, alpha_, true, true};
      return {alpha_, alpha_ + beta_, true, false};  // sup not attained
    case Family::Decaying:
      return {0.0, alpha_, false, true};  // inf attained only in the limit
    case Family::TableLinear: {
      double lo = knots_.front().second, hi = lo;
      for (const auto& [s, v] : knots_) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return {lo, hi, true, true};
    }
  }
  return {};
}

std::optional<double> GFunction::invert(double t) const {
  if (!range().contains(t)) return std::nullopt;
  switch (family_) {
    case Family::Constant:
      return 0.0;  // every s matches; smallest
    case Family::Saturating: {
      if (beta_ == 0.0) return 0.0;
      return (t - alpha_) / (alpha_ + beta_ - t);
    }
    case Family::Decaying:
      return alpha_ / t - 1.0;
    case Family::TableLinear: {
      if (t == knots_.front().second) return 0.0;  // constant before the first knot
      for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
        const auto& [s0, v0] = knots_[k];
        const auto& [s1, v1] = knots_[k + 1];
        if ((t >= std::min(v0, v1)) && (t <= std::max(v0, v1))) {
          if (v1 == v0) return s0;
          return s0 + (t - v0) * (s1 - s0) / (v1 - v0);
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

double GFunction::inf_value() const {
  switch (family_) {
    case Family::Constant:
      return g0_;
    case Family::Saturating:
      return alpha_;
    case Family::Decaying:
      return 0.0;
    case Family::TableLinear:
      return range().lo;
  }
  return 0.0;
}

bool GFunction::satisfies_g1() const { return inf_value() > 0.0; }

bool GFunction::satisfies_g2() const {
  // Every catalogue member is bounded except nothing; g(0) > 0 is the bite.
  return eval(0.0) > 0.0;
}

std::vector<std::string> GFunction::invariant_violations() const {
  std::vector<std::string> v;
  switch (family_) {
    case Family::Constant:
      if (!(g0_ > 0.0)) v.push_back("Constant g requires g0 > 0");
      break;
    case Family::Saturating:
      if (!(alpha_ > 0.0)) v.push_back("Saturating g requires alpha > 0");
      if (!(beta_ >= 0.0)) v.push_back("Saturating g requires beta >= 0");
      break;
    case Family::Decaying:
      if (!(alpha_ > 0.0)) v.push_back("Decaying g requires alpha > 0");
      break;
    case Family::TableLinear: {
      if (knots_.empty()) {
        v.push_back("TableLinear g requires at least one knot");
        break;
      }
      for (std::size_t k = 0; k < knots_.size(); ++k) {
        if (knots_[k].second < 0.0) {
          v.push_back("TableLinear g requires nonnegative values");
          break;
        }
      }
      for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
        if (!(knots_[k].first < knots_[k + 1].first)) {
          v.push_back("TableLinear g requires strictly increasing knots");
          break;
        }
      }
      if (knots_.front().first < 0.0) v.push_back("TableLinear g knots must have s >= 0");
      break;
    }
  }
  return v;
}

std::string GFunction::family_name() const {
  switch (family_) {
    case Family::Constant:
      return "constant";
    case Family::Saturating:
      return "saturating";
    case Family::Decaying:
      return "decaying";
    case Family::TableLinear:
      return "table";
  }
  return "?";
}

bool ValidationOutcome::has_regime(const std::string& tag) const {
  return std::find(regimes.begin(), regimes.end(), tag) != regimes.end();
}

ValidationOutcome validate_params(const ProblemParams& params, const GFunction& g,
                                  double lambda1) {
  ValidationOutcome out;
  if (lambda1 <= 0.0) lambda1 = kPi * kPi;
  out.lambda1_used = lambda1;

  if (!(params.p > 1.0)) out.violations.push_back("p > 1 required");
  if (!(params.r > 1.0)) out.violations.push_back("r > 1 required");
  if (!(params.a > 0.0)) out.violations.push_back("a > 0 required");
  for (double v : {params.a, params.b, params.p, params.r})
    if (!std::isfinite(v)) {
      out.violations.push_back("parameters must be finite");
      break;
    }
  auto gv = g.invariant_violations();
  out.violations.insert(out.violations.end(), gv.begin(), gv.end());
  out.ok = out.violations.empty();
  if (!out.ok) return out;

  out.g1 = g.satisfies_g1();
  out.g2 = g.satisfies_g2();

  const double g_at_0 = g.eval(0.0);
  const bool rp_equal = nearly_equal(params.r, params.p, kExponentTol);

  if (out.g1 && params.a > g_at_0 * lambda1) {
    if (params.b <= 0.0) out.regimes.push_back("A(i)");
    if (params.b > 0.0 && rp_equal && params.b < lambda1) out.regimes.push_back("A(ii)");
    if (params.b > 0.0 && !rp_equal && params.r > params.p) out.regimes.push_back("A(iii)");
  }
  if (out.g2) {
    if (rp_equal && params.b > lambda1 && params.a < g_at_0 * lambda1)
      out.regimes.push_back("B(i)");
    if (!rp_equal && params.b > 0.0 && params.r < params.p) {
      // N = 1: the Sobolev-critical bound on p/r is vacuous.
      const double phi_s0 = phi_smax(lambda1, params).phi_s0;
      if (g_at_0 * lambda1 > phi_s0 && params.a > phi_s0 && params.a < g_at_0 * lambda1)
        out.regimes.push_back("B(ii)");
    }
  }
  if (rp_equal && params.r < 2.0 && nearly_equal(params.b, lambda1, 1e-2))
    out.regimes.push_back("C");

  return out;
}

double g_eval(const GFunction& g, double s) { return g.eval(s); }

}  // namespace kcont
