#include "core/polyalg.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"

namespace softedge {

namespace {

std::vector<AiryQuad> omega0_chain(const AiryQuad& omega0, int depth) {
    std::vector<AiryQuad> d{omega0};
    for (int k = 0; k < depth; ++k) d.push_back(d.back().diff());
    return d;
}

const BiPoly& quad_slot(const AiryQuad& q, int slot) {
    switch (slot) {
        case 0: return q.ai2;
        case 1: return q.aip2;
        case 2: return q.ai_aip;
        case 3: return q.ai_int;
        default: return q.aip_int;
    }
}

// contribution of P_k to omega_j: P_k d^k omega_0 + P_k' d^{k-1} omega_0
AiryQuad contribution(const std::vector<AiryQuad>& chain, int k, const BiPoly& P) {
    return chain[k].scaled(P) + chain[k - 1].scaled(P.diff_s());
}

void check_support(int beta, int j) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw Error(Errc::invalid, "beta must be 1, 2 or 4");
    if (j < 1 || j > 2)
        throw Error(Errc::unsupported_order, "generating-function corrections cover j = 1, 2");
    if (beta == 2 && j == 2)
        throw Error(Errc::unsupported_order,
                    "beta = 2 yields three polynomial equations, not enough to determine the "
                    "four second-correction polynomials");
}

}  // namespace

AiryCombo omega_from_P(int beta, int j, const std::vector<BiPoly>& P) {
    check_support(beta, j);
    if ((int)P.size() != 2 * j)
        throw Error(Errc::invalid, "omega_from_P: expected 2j polynomials");
    AiryQuad omega0 = density_table(beta, 0, Family::Kind::laguerre);
    auto chain = omega0_chain(omega0, 2 * j);
    AiryQuad acc;
    for (int k = 1; k <= 2 * j; ++k) acc = acc + contribution(chain, k, P[k - 1]);
    return {acc, beta == 1 ? 1 : 0};
}

std::vector<BiPoly> reconstruct_P(int beta, int j, const AiryCombo& omega,
                                  const AiryCombo& omega0) {
    check_support(beta, j);
    auto chain = omega0_chain(omega0.coeffs, 2 * j);

    int ds_max = 0, dt_max = 0;
    for (int slot = 0; slot < 5; ++slot) {
        ds_max = std::max(ds_max, quad_slot(omega.coeffs, slot).max_deg_s());
        dt_max = std::max(dt_max, quad_slot(omega.coeffs, slot).max_deg_tau());
    }
    int Ds = ds_max + 2, Dt = dt_max + 1;

    // Unknown columns: monomial (a, b) of P_k, ordered P_{2j}, ..., P_1.
    struct Col {
        int k, a, b;
    };
    std::vector<Col> cols;
    for (int k = 2 * j; k >= 1; --k)
        for (int a = Ds; a >= 0; --a)
            for (int b = Dt; b >= 0; --b) cols.push_back({k, a, b});

    // Equations: coefficient of every monomial of every basis slot.
    using EqKey = std::tuple<int, int, int>;  // (slot, deg_s, deg_tau)
    std::map<EqKey, std::map<int, Rational>> rows;
    std::map<EqKey, Rational> rhs;

    for (size_t c = 0; c < cols.size(); ++c) {
        BiPoly mono;
        mono.add_term(cols[c].a, cols[c].b, Rational(1));
        AiryQuad contrib = contribution(chain, cols[c].k, mono);
        for (int slot = 0; slot < 5; ++slot)
            for (const auto& [deg, coef] : quad_slot(contrib, slot).terms())
                rows[{slot, deg.first, deg.second}][(int)c] = coef;
    }
    for (int slot = 0; slot < 5; ++slot)
        for (const auto& [deg, coef] : quad_slot(omega.coeffs, slot).terms()) {
            rhs[{slot, deg.first, deg.second}] = coef;
            rows[{slot, deg.first, deg.second}];  // ensure the equation exists
        }

    // Exact Gauss-Jordan elimination, pivoting column by column in the
    // declared order (P_{2j} first).
    std::vector<EqKey> pivot_of_col(cols.size());
    std::map<EqKey, bool> used;
    std::vector<bool> has_pivot(cols.size(), false);
    for (size_t c = 0; c < cols.size(); ++c) {
        const EqKey* pick = nullptr;
        for (auto& [key, row] : rows) {
            if (used[key]) continue;
            auto it = row.find((int)c);
            if (it != row.end() && !it->second.is_zero()) {
                pick = &key;
                break;
            }
        }
        if (!pick) continue;  // column never appears (or already eliminated away)
        EqKey pkey = *pick;
        used[pkey] = true;
        has_pivot[c] = true;
        pivot_of_col[c] = pkey;
        const auto prow = rows[pkey];  // copy: the loop below mutates rows
        Rational pval = prow.at((int)c);
        for (auto& [key, row] : rows) {
            if (key == pkey) continue;
            auto it = row.find((int)c);
            if (it == row.end() || it->second.is_zero()) continue;
            Rational f = it->second / pval;
            for (const auto& [cc, vv] : prow) {
                auto jt = row.find(cc);
                if (jt == row.end())
                    row[cc] = -(f * vv);
                else {
                    jt->second -= f * vv;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
            Rational& r = rhs[key];
            r -= f * rhs[pkey];
        }
    }

    // Read off the solution, then verify every equation exactly.
    std::vector<BiPoly> P(2 * j);
    for (size_t c = 0; c < cols.size(); ++c) {
        if (!has_pivot[c]) continue;
        const auto& row = rows[pivot_of_col[c]];
        Rational value = rhs[pivot_of_col[c]] / row.at((int)c);
        if (row.size() != 1)
            throw Error(Errc::inconsistent_system,
                        "reconstruct_P: system is underdetermined (free coupling left)");
        if (!value.is_zero()) P[cols[c].k - 1].add_term(cols[c].a, cols[c].b, value);
    }
    AiryQuad check;
    for (int k = 1; k <= 2 * j; ++k) check = check + contribution(chain, k, P[k - 1]);
    if (!(check == omega.coeffs))
        throw Error(Errc::inconsistent_system,
                    "reconstruct_P: tables do not solve the comparison system exactly");
    return P;
}

}  // namespace softedge
