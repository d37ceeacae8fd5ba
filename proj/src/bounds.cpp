#include "steklov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "steklov/closedform.hpp"
#include "steklov/error.hpp"
#include "steklov/solver.hpp"

namespace steklov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double feasibility_slack(double r1, double r2, double length) {
    return 1e-12 * std::max({r1, r2, length, 1.0});
}

struct Geometry {
    int n;
    double r1, r2, length;
    double l1, l2;
};

Geometry geometry(Dimension n, double r1, double r2, double length) {
    double l1 = 0.5 * (length - r1 + r2);
    double l2 = length - l1;
    l1 = std::max(l1, 0.0);
    l2 = std::max(l2, 0.0);
    return {n.value(), r1, r2, length, l1, l2};
}

double f1_raw(Dimension n, double r1, double r2, double length) {
    const auto g = geometry(n, r1, r2, length);
    const double tiny = feasibility_slack(r1, r2, length);
    if (g.l1 <= tiny || g.l2 <= tiny) return kInf;
    const double p = n.sphere_dim();
    const double c1 = 1.0 / (1.0 + std::pow(r1 / r2, p));
    const double c2 = 1.0 / (1.0 + std::pow(r2 / r1, p));
    return c1 * sigma_dirichlet(ShellSpec(n, r1, g.l1), 0) +
           c2 * sigma_dirichlet(ShellSpec(n, r2, g.l2), 0);
}

Weights weights_raw(Dimension n, double r1, double r2, double length) {
    const double p = n.sphere_dim();
    const double c = std::pow(r1 + r2 + length, n.value()) / (p * std::ldexp(1.0, n.value()));
    auto q = [&](double r) {
        const double t = r + c * std::pow(r, 1.0 - double(n.value()));
        return std::pow(r, p) * t * t;
    };
    Weights w;
    w.q1 = q(r1);
    w.q2 = q(r2);
    w.alpha = w.q1 / (w.q1 + w.q2);
    w.beta = w.q2 / (w.q1 + w.q2);
    return w;
}

double f2_raw(Dimension n, double r1, double r2, double length) {
    const auto g = geometry(n, r1, r2, length);
    const auto w = weights_raw(n, r1, r2, length);
    return w.alpha * sigma_neumann(ShellSpec(n, r1, g.l1), 1) +
           w.beta * sigma_neumann(ShellSpec(n, r2, g.l2), 1);
}

}  // namespace

BoundInputs::BoundInputs(Dimension dim, double a, double b, double len)
    : n(dim), r1(a), r2(b), length(len) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidInputError("boundary radii must be positive and finite");
    }
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw InvalidInputError("meridian length must be positive and finite");
    }
    if (len < std::abs(a - b) - feasibility_slack(a, b, len)) {
        throw InvalidInputError("infeasible geometry: L < |R1 - R2|");
    }
}

BoundInputs BoundInputs::scaled(double t) const {
    return BoundInputs(n, r1 * t, r2 * t, length * t);
}

std::string to_string(BoundCombo c) { return c == BoundCombo::Neumann ? "neumann" : "dirichlet"; }

SplitLengths split_length(const BoundInputs& in) {
    const auto g = geometry(in.n, in.r1, in.r2, in.length);
    return {g.l1, g.l2};
}

Weights weights(const BoundInputs& in) { return weights_raw(in.n, in.r1, in.r2, in.length); }

double dirichlet_combo(const BoundInputs& in) { return f1_raw(in.n, in.r1, in.r2, in.length); }

double neumann_combo(const BoundInputs& in) { return f2_raw(in.n, in.r1, in.r2, in.length); }

BoundReport theorem2_bound(const BoundInputs& given) {
    const bool swap = given.r1 < given.r2;
    const BoundInputs in = swap ? given.swapped() : given;
    const auto split = split_length(in);
    const auto w = weights(in);
    BoundReport rep;
    rep.r1 = in.r1;
    rep.r2 = in.r2;
    rep.length = in.length;
    rep.swapped = swap;
    rep.l1 = split.l1;
    rep.q1 = w.q1;
    rep.q2 = w.q2;
    rep.alpha = w.alpha;
    rep.beta = w.beta;
    rep.neumann_combo = neumann_combo(in);
    rep.dirichlet_combo = dirichlet_combo(in);
    if (rep.dirichlet_combo < rep.neumann_combo) {
        rep.bound = rep.dirichlet_combo;
        rep.attained_by = BoundCombo::Dirichlet;
    } else {
        rep.bound = rep.neumann_combo;
        rep.attained_by = BoundCombo::Neumann;
    }
    return rep;
}

CrossingResult lstar_crossing(Dimension n, double r1, double r2, double tol) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidInputError("boundary radii must be positive");
    if (!(tol > 0.0)) throw InvalidInputError("tolerance must be positive");
    if (r1 < r2) std::swap(r1, r2);

    const double lo_edge = r1 - r2;
    const double scale = std::max(r1, r2);
    const double limit = 1e6 * scale;

    auto f1 = [&](double L) { return f1_raw(n, r1, r2, L); };
    auto f2 = [&](double L) { return f2_raw(n, r1, r2, L); };

    // Expand the right end until f1 < f2, checking the monotonicity that makes
    // the crossing unique.
    double lo = lo_edge;
    double step = scale;
    double hi = lo_edge + step;
    double prev_f1 = kInf;
    double prev_f2 = f2(lo_edge);
    int iterations = 0;
    while (true) {
        const double a = f1(hi);
        const double b = f2(hi);
        if (!(a < prev_f1) || !(b > prev_f2)) {
            std::ostringstream os;
            os << "monotonicity violated while bracketing the crossing at L = " << hi
               << " (f1: " << prev_f1 << " -> " << a << ", f2: " << prev_f2 << " -> " << b << ")";
            throw NumericalError(os.str());
        }
        if (a < b) break;
        lo = hi;
        prev_f1 = a;
        prev_f2 = b;
        step *= 2.0;
        hi = lo_edge + step;
        if (hi > limit) {
            throw NumericalError("no crossing of the Dirichlet and Neumann combinations below L = " +
                                 std::to_string(limit));
        }
        ++iterations;
    }

    double mid = 0.5 * (lo + hi);
    double a = f1(mid);
    double b = f2(mid);
    for (int it = 0; it < 400; ++it, ++iterations) {
        mid = 0.5 * (lo + hi);
        a = f1(mid);
        b = f2(mid);
        if (std::abs(a - b) <= tol * a) break;
        if (a > b) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (!(hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi)) break;
    }
    if (!(std::abs(a - b) <= tol * a)) {
        // Interval exhausted at machine precision; accept if within rounding.
        if (!(std::abs(a - b) <= 1e-12 * a)) {
            throw NumericalError("bisection for the crossing length did not converge");
        }
    }
    return {mid, a, b, a, iterations};
}

double lstar(Dimension n, double r1, double r2, double tol) {
    return lstar_crossing(n, r1, r2, tol).lstar;
}

double b_n(Dimension n, double r1, double r2, double tol) {
    return lstar_crossing(n, r1, r2, tol).b_n;
}

WeightSignDiagnostic weight_sign_diagnostic(const BoundInputs& in, int grid_size) {
    const auto split = split_length(in);
    const int nn = in.n.value();
    const double p = in.n.sphere_dim();
    const double apex = 0.5 * (in.r1 + in.r2 + in.length);
    const double c = std::pow(in.r1 + in.r2 + in.length, nn) / (p * std::ldexp(1.0, nn));
    // Value of r + c r^{1-n} at the outer radius.
    const double at_apex = apex * double(nn) / p;

    WeightSignDiagnostic d{};
    const double radii[2] = {in.r1, in.r2};
    const double widths[2] = {split.l1, split.l2};
    for (int i = 0; i < 2; ++i) {
        const double R = radii[i];
        const double tail = c * std::pow(R, 1.0 - nn);
        d.q_plus[i] = std::pow(R, p) * (R + tail) * (R + tail);
        d.q_minus[i] = std::pow(R, p) * (R - tail) * (R - tail);
        double psi0 = at_apex;
        if (widths[i] > 0.0) {
            const auto e = mixed_extension(ShellSpec(in.n, R, widths[i]), 1, OuterCondition::Neumann,
                                           grid_size);
            psi0 = at_apex / e.values.back();
        }
        d.q_numeric[i] = std::pow(R, p) * psi0 * psi0;
    }
    auto alpha = [](const double q[2]) { return q[0] / (q[0] + q[1]); };
    const double a_num = alpha(d.q_numeric);
    d.alpha_error_plus = std::abs(alpha(d.q_plus) - a_num) / a_num;
    d.alpha_error_minus = std::abs(alpha(d.q_minus) - a_num) / a_num;
    return d;
}

}  // namespace steklov
