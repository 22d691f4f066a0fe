#pragma once

/**
 * @file resolution.hpp
 * @brief Embedded resolution of a plane curve germ by point blowups.
 *
 * Every infinitely near point is handled in local affine coordinates (u, v)
 * centred at the point, with the exceptional divisors through it placed on
 * the coordinate axes. Blowing up uses the two charts
 *
 *     (u, v) ↦ (u, u·v)   new divisor {u = 0}, old {v = 0} stays {v = 0}
 *     (u, v) ↦ (u·v, v)   new divisor {v = 0}, old {u = 0} stays {u = 0}
 *
 * so at most two divisors ever meet a point and they always cross
 * transversally. The second chart only contributes its origin (the point at
 * infinity of the new ℙ¹).
 *
 * A point of the strict transform is blown up while it is singular, lies on
 * two divisors, or is tangent to the divisor it lies on. New divisors are
 * decorated additively over the divisors through the centre:
 *
 *     N = Σ N_j + mult(strict, centre),   ν = Σ ν_j + 1,   m = Σ m_j
 *
 * with (N, ν, m) = (mult_0 f, 1, 1) for the blowup of the origin.
 */

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "curvilinear/bivariate.hpp"
#include "curvilinear/curve.hpp"
#include "curvilinear/error.hpp"
#include "curvilinear/laurent.hpp"
#include "curvilinear/univariate.hpp"

namespace curvilinear {

struct Divisor {
    int id = 0;
    int N = 0;  ///< multiplicity of f along the divisor
    int nu = 0; ///< discrepancy + 1
    int m = 0;  ///< order: multiplicity of the maximal ideal of the origin
    std::vector<int> neighbors; ///< sorted ids of intersecting divisors
    std::optional<int> strict_meets;
    /// Explicit classes, as given in a resolution file; computed from the
    /// counts when absent and the ambient dimension is 2.
    std::optional<LaurentPoly> class_open;
    std::optional<LaurentPoly> class_strict;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// One entry of the blowup log: the divisor created, the divisors through
/// its centre, and the multiplicity of the strict transform there.
struct BlowupStep {
    int divisor = 0;
    std::vector<int> through;
    int strict_multiplicity = 0;
};

/// A point where the final strict transform meets the exceptional locus,
/// with the local equation there; the divisor is {u = 0} when
/// `divisor_on_u_axis`, else {v = 0}.
struct FinalPoint {
    int divisor = 0;
    bool divisor_on_u_axis = true;
    QPoly2 local_equation;
};

struct ResolutionData {
    int ambient_dim = 2;
    std::vector<Divisor> divisors;
    std::optional<int> origin_mult;
    std::optional<LaurentPoly> h2; ///< explicit base class H_2, for files
    std::vector<BlowupStep> log;
    std::vector<FinalPoint> final_points;

    const Divisor& divisor(int id) const {
        for (const auto& d : divisors) {
            if (d.id == id) return d;
        }
        throw Error(ErrorCode::UnknownDivisor, "no divisor with id " + std::to_string(id));
    }
};

namespace detail {

struct LocalPoint {
    QPoly2 strict;
    std::optional<int> u_axis; ///< divisor {u = 0} through the point
    std::optional<int> v_axis; ///< divisor {v = 0} through the point
};

class Resolver {
public:
    ResolutionData run(const CurvePoly& f) {
        if (!is_squarefree(f.poly())) {
            throw Error(ErrorCode::NonReducedInput, to_string(f) + " has a repeated factor");
        }
        res_.origin_mult = multiplicity_at(f);
        blow_up(LocalPoint{f.poly(), std::nullopt, std::nullopt});
        while (!pending_.empty()) {
            LocalPoint p = std::move(pending_.front());
            pending_.pop_front();
            examine(std::move(p));
        }
        for (auto& d : res_.divisors) {
            d.neighbors.assign(neighbors_[static_cast<std::size_t>(d.id - 1)].begin(),
                               neighbors_[static_cast<std::size_t>(d.id - 1)].end());
        }
        return std::move(res_);
    }

private:
    Divisor& divisor(int id) { return res_.divisors[static_cast<std::size_t>(id - 1)]; }

    void connect(int a, int b) {
        neighbors_[static_cast<std::size_t>(a - 1)].insert(b);
        neighbors_[static_cast<std::size_t>(b - 1)].insert(a);
    }
    void disconnect(int a, int b) {
        neighbors_[static_cast<std::size_t>(a - 1)].erase(b);
        neighbors_[static_cast<std::size_t>(b - 1)].erase(a);
    }

    void examine(LocalPoint p) {
        const int mult = order_at_origin(p.strict);
        const bool on_two = p.u_axis && p.v_axis;
        bool tangent = false;
        if (p.u_axis && p.strict.coefficient({0, 1}) == 0) tangent = true;
        if (p.v_axis && p.strict.coefficient({1, 0}) == 0) tangent = true;
        if (mult >= 2 || on_two || tangent) {
            blow_up(std::move(p));
            return;
        }
        const int d = p.u_axis ? *p.u_axis : *p.v_axis;
        *divisor(d).strict_meets += 1;
        res_.final_points.push_back({d, p.u_axis.has_value(), std::move(p.strict)});
    }

    void blow_up(LocalPoint p) {
        const int mult = order_at_origin(p.strict);
        const int id = static_cast<int>(res_.divisors.size()) + 1;
        BlowupStep step{id, {}, mult};
        Divisor e{.id = id, .N = mult, .nu = 1, .m = 0, .neighbors = {}, .strict_meets = 0, .class_open = {}, .class_strict = {}};
        for (const auto& through : {p.u_axis, p.v_axis}) {
            if (!through) continue;
            const Divisor& d = divisor(*through);
            e.N += d.N;
            e.nu += d.nu;
            e.m += d.m;
            step.through.push_back(*through);
        }
        if (id == 1) e.m = 1;
        res_.divisors.push_back(e);
        neighbors_.emplace_back();
        res_.log.push_back(step);
        if (p.u_axis && p.v_axis) disconnect(*p.u_axis, *p.v_axis);
        if (p.u_axis) connect(*p.u_axis, id);
        if (p.v_axis) connect(*p.v_axis, id);

        // Chart (u, uv): the new divisor is {u = 0}; the strict transform
        // meets it at the roots of g(0, v).
        const QPoly2 gx = chart_x(p.strict, mult);
        const RootSummary roots = summarize_roots(restrict_to_x_zero(gx));
        if (!roots.irrational.empty()) {
            throw Error(ErrorCode::IrrationalCenter,
                        "the strict transform meets E" + std::to_string(id) + " at points not defined over Q");
        }
        for (const auto& [c, root_mult] : roots.rational) {
            pending_.push_back(LocalPoint{translate(gx, 0, c), id, c == 0 ? p.v_axis : std::nullopt});
        }

        // Chart (uv, v): only the point at infinity u = v = 0 is new.
        QPoly2 gy = chart_y(p.strict, mult);
        if (gy.coefficient({0, 0}) == 0) pending_.push_back(LocalPoint{std::move(gy), p.u_axis, id});
    }

    ResolutionData res_;
    std::vector<std::set<int>> neighbors_;
    std::deque<LocalPoint> pending_;
};

} // namespace detail

/// Embedded resolution of C = {f = 0} ∪ {0}: the origin is always blown up.
inline ResolutionData resolve(const CurvePoly& f) { return detail::Resolver{}.run(f); }

/// [(E_i \ Ṽ)°]: explicit when given, else (L + 1) − (#neighbors + strict_meets).
inline LaurentPoly class_open(const ResolutionData& res, int id) {
    const Divisor& d = res.divisor(id);
    if (d.class_open) return *d.class_open;
    if (res.ambient_dim != 2 || !d.strict_meets) {
        throw Error(ErrorCode::MissingClassData, "no open class for divisor " + std::to_string(id));
    }
    const int k = static_cast<int>(d.neighbors.size()) + *d.strict_meets;
    return lefschetz() + LaurentPoly(1 - k);
}

/// [(E_i ∩ Ṽ)°]: explicit when given, else the number of meeting points.
inline LaurentPoly class_strict(const ResolutionData& res, int id) {
    const Divisor& d = res.divisor(id);
    if (d.class_strict) return *d.class_strict;
    if (!d.strict_meets) {
        throw Error(ErrorCode::MissingClassData, "no strict-transform class for divisor " + std::to_string(id));
    }
    return LaurentPoly(*d.strict_meets);
}

/// Ids of the divisors of order 1.
inline std::vector<int> order_one_set(const ResolutionData& res) {
    std::vector<int> out;
    for (const auto& d : res.divisors) {
        if (d.m == 1) out.push_back(d.id);
    }
    return out;
}

/// Dual graph as sorted pairs (a, b) with a < b.
inline std::vector<std::pair<int, int>> dual_graph_edges(const ResolutionData& res) {
    std::vector<std::pair<int, int>> out;
    for (const auto& d : res.divisors) {
        for (int n : d.neighbors) {
            if (d.id < n) out.emplace_back(d.id, n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A smooth branch exists iff the strict transform meets a divisor of order 1.
inline bool has_smooth_branch(const ResolutionData& res) {
    for (int id : order_one_set(res)) {
        if (!class_strict(res, id).is_zero()) return true;
    }
    return false;
}

inline bool has_smooth_branch(const CurvePoly& f) { return has_smooth_branch(resolve(f)); }

} // namespace curvilinear
