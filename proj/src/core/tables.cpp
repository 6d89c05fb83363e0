#include "core/tables.hpp"

#include "core/error.hpp"

namespace softedge {

namespace {

using T = BiPoly::Term;  // {num, den, deg_s, deg_tau}

struct OmegaSet {
    AiryQuad j0, j1, j2;
    const AiryQuad& at(int j) const {
        switch (j) {
            case 0: return j0;
            case 1: return j1;
            case 2: return j2;
        }
        throw Error(Errc::unsupported_order, "density tables stop at j = 2");
    }
};

// beta = 2, Laguerre (tau = 0 gives the Gaussian table)
const OmegaSet kUnitaryLaguerre = {
    // j = 0: -s Ai^2 + Ai'^2
    {BiPoly{{-1, 1, 1, 0}}, BiPoly{{1, 1, 0, 0}}, {}, {}, {}},
    // j = 1
    {BiPoly{{6, 5, 2, 1}, {-3, 5, 2, 0}},           // 3(2tau-1)/5 s^2
     BiPoly{{-4, 5, 1, 1}, {2, 5, 1, 0}},           // -2(2tau-1)/5 s
     BiPoly{{-1, 5, 0, 1}, {3, 5, 0, 0}}, {}, {}},  // (3-tau)/5
    // j = 2
    {BiPoly{{-214, 175, 3, 2}, {79, 175, 3, 1}, {39, 175, 3, 0},
            {1, 100, 0, 2}, {-6, 100, 0, 1}, {9, 100, 0, 0}},
     BiPoly{{143, 175, 2, 2}, {-103, 175, 2, 1}, {-3, 175, 2, 0}},
     BiPoly{{-4, 25, 4, 2}, {4, 25, 4, 1}, {-1, 25, 4, 0},
            {29, 175, 1, 2}, {-4, 175, 1, 1}, {-99, 175, 1, 0}},
     {}, {}},
};

// beta = 2, Gaussian (entered independently, not derived from the tau = 0 limit)
const OmegaSet kUnitaryGaussian = {
    {BiPoly{{-1, 1, 1, 0}}, BiPoly{{1, 1, 0, 0}}, {}, {}, {}},
    {BiPoly{{-3, 5, 2, 0}}, BiPoly{{2, 5, 1, 0}}, BiPoly{{3, 5, 0, 0}}, {}, {}},
    {BiPoly{{39, 175, 3, 0}, {9, 100, 0, 0}},
     BiPoly{{-3, 175, 2, 0}},
     BiPoly{{-1, 25, 4, 0}, {-99, 175, 1, 0}},
     {}, {}},
};

// beta = 1, 4 (shared polynomials), Laguerre
const OmegaSet kSkewLaguerre = {
    // j = 0: -s Ai^2 + Ai'^2 + (1/2) Ai AI
    {BiPoly{{-1, 1, 1, 0}}, BiPoly{{1, 1, 0, 0}}, {}, BiPoly{{1, 2, 0, 0}}, {}},
    // j = 1
    {BiPoly{{2, 2, 2, 1}, {-1, 2, 2, 0}},            // (2tau-1)/2 s^2
     BiPoly{{-4, 5, 1, 1}, {2, 5, 1, 0}},            // -2(2tau-1)/5 s
     BiPoly{{-1, 10, 0, 1}, {3, 10, 0, 0}},          // (3-tau)/10
     BiPoly{{-3, 10, 1, 1}, {-1, 10, 1, 0}},         // -(3tau+1)/10 s
     BiPoly{{-2, 10, 2, 1}, {1, 10, 2, 0}}},         // -(2tau-1)/10 s^2
    // j = 2
    {BiPoly{{-51, 50, 3, 2}, {26, 50, 3, 1}, {6, 50, 3, 0},
            {37, 1400, 0, 2}, {-372, 1400, 0, 1}, {558, 1400, 0, 0}},
     BiPoly{{272, 350, 2, 2}, {-157, 350, 2, 1}, {-27, 350, 2, 0}},
     BiPoly{{-4, 100, 4, 2}, {4, 100, 4, 1}, {-1, 100, 4, 0},
            {13, 140, 1, 2}, {-10, 140, 1, 1}, {-27, 140, 1, 0}},
     BiPoly{{4, 100, 5, 2}, {-4, 100, 5, 1}, {1, 100, 5, 0},
            {33, 140, 2, 2}, {8, 140, 2, 1}, {9, 140, 2, 0}},
     BiPoly{{17, 70, 3, 2}, {-5, 70, 3, 1}, {-3, 70, 3, 0},
            {1, 280, 0, 2}, {24, 280, 0, 1}, {-36, 280, 0, 0}}},
};

// beta = 1, 4, Gaussian
const OmegaSet kSkewGaussian = {
    {BiPoly{{-1, 1, 1, 0}}, BiPoly{{1, 1, 0, 0}}, {}, BiPoly{{1, 2, 0, 0}}, {}},
    {BiPoly{{-1, 2, 2, 0}},
     BiPoly{{2, 5, 1, 0}},
     BiPoly{{3, 10, 0, 0}},
     BiPoly{{-1, 10, 1, 0}},
     BiPoly{{1, 10, 2, 0}}},
    {BiPoly{{3, 25, 3, 0}, {279, 700, 0, 0}},
     BiPoly{{-27, 350, 2, 0}},
     BiPoly{{-1, 100, 4, 0}, {-27, 140, 1, 0}},
     BiPoly{{1, 100, 5, 0}, {9, 140, 2, 0}},
     BiPoly{{-3, 70, 3, 0}, {-9, 70, 0, 0}}},
};

}  // namespace

const AiryQuad& density_table(int beta, int j, Family::Kind family) {
    if (j < 0 || j > 2)
        throw Error(Errc::unsupported_order,
                    "density expansion tables stop at j = 2; higher orders are not built in");
    bool lag = family == Family::Kind::laguerre;
    switch (beta) {
        case 2: return (lag ? kUnitaryLaguerre : kUnitaryGaussian).at(j);
        case 1:
        case 4: return (lag ? kSkewLaguerre : kSkewGaussian).at(j);
    }
    throw Error(Errc::invalid, "density_table: beta must be 1, 2 or 4");
}

std::pair<BiPoly, BiPoly> wave_series_table(int k, Family::Kind family) {
    if (k < 1 || k > 2)
        throw Error(Errc::unsupported_order, "wave expansion tables stop at k = 2");
    if (family == Family::Kind::hermite) {
        if (k == 1) return {BiPoly{{-1, 5, 1, 0}}, BiPoly{{1, 5, 2, 0}}};
        return {BiPoly{{1, 50, 5, 0}, {9, 70, 2, 0}}, BiPoly{{-3, 35, 3, 0}, {-9, 35, 0, 0}}};
    }
    if (k == 1)
        return {BiPoly{{-3, 5, 1, 1}, {-1, 5, 1, 0}},    // -(3tau+1)/5 s
                BiPoly{{-2, 5, 2, 1}, {1, 5, 2, 0}}};    // -(2tau-1)/5 s^2
    return {BiPoly{{4, 50, 5, 2}, {-4, 50, 5, 1}, {1, 50, 5, 0},
                   {33, 70, 2, 2}, {8, 70, 2, 1}, {9, 70, 2, 0}},
            BiPoly{{17, 35, 3, 2}, {-5, 35, 3, 1}, {-3, 35, 3, 0},
                   {1, 140, 0, 2}, {24, 140, 0, 1}, {-36, 140, 0, 0}}};
}

std::pair<BiPoly, BiPoly> wave_antideriv_table(int k, Family::Kind family) {
    if (k < 1 || k > 2)
        throw Error(Errc::unsupported_order, "wave expansion tables stop at k = 2");
    if (family == Family::Kind::hermite) {
        if (k == 1) return {BiPoly{{1, 5, 2, 0}}, BiPoly{{-3, 5, 0, 0}}};
        return {BiPoly{{-29, 175, 3, 0}, {-309, 350, 0, 0}},
                BiPoly{{1, 50, 4, 0}, {219, 350, 1, 0}}};
    }
    if (k == 1)
        return {BiPoly{{-2, 5, 2, 1}, {1, 5, 2, 0}},     // -(2tau-1)/5 s^2
                BiPoly{{1, 5, 0, 1}, {-3, 5, 0, 0}}};    // (tau-3)/5
    return {BiPoly{{29, 175, 3, 2}, {31, 175, 3, 1}, {-29, 175, 3, 0},
                   {23, 700, 0, 2}, {412, 700, 0, 1}, {-618, 700, 0, 0}},
            BiPoly{{4, 50, 4, 2}, {-4, 50, 4, 1}, {1, 50, 4, 0},
                   {-9, 350, 1, 2}, {-146, 350, 1, 1}, {219, 350, 1, 0}}};
}

const std::vector<BiPoly>& reference_gen_poly(int beta, int j) {
    // beta = 2, j = 1
    static const std::vector<BiPoly> u1 = {
        BiPoly{{-2, 5, 2, 1}, {1, 5, 2, 0}},   // P1 = -(2tau-1)/5 s^2
        BiPoly{{1, 10, 0, 1}, {-3, 10, 0, 0}}  // P2 = (tau-3)/10
    };
    // beta = 1 (= 4), j = 1
    static const std::vector<BiPoly> s1 = {
        BiPoly{{-2, 5, 2, 1}, {1, 5, 2, 0}},  // P1 = -(2tau-1)/5 s^2
        BiPoly{{1, 5, 0, 1}, {-3, 5, 0, 0}}   // P2 = (tau-3)/5
    };
    // beta = 1 (= 4), j = 2
    static const std::vector<BiPoly> s2 = {
        // P1 = (43tau^2-18tau-8)/175 s^3 + (9tau^2+496tau-744)/700
        BiPoly{{43, 175, 3, 2}, {-18, 175, 3, 1}, {-8, 175, 3, 0},
               {9, 700, 0, 2}, {496, 700, 0, 1}, {-744, 700, 0, 0}},
        // P2 = (2tau-1)^2/50 s^4 - 2(4tau^2+26tau-39)/175 s
        BiPoly{{4, 50, 4, 2}, {-4, 50, 4, 1}, {1, 50, 4, 0},
               {-8, 175, 1, 2}, {-52, 175, 1, 1}, {78, 175, 1, 0}},
        // P3 = -(tau-3)(2tau-1)/25 s^2 = (-2tau^2+7tau-3)/25 s^2
        BiPoly{{-2, 25, 2, 2}, {7, 25, 2, 1}, {-3, 25, 2, 0}},
        // P4 = (tau-3)^2/50
        BiPoly{{1, 50, 0, 2}, {-6, 50, 0, 1}, {9, 50, 0, 0}},
    };
    if (beta == 2 && j == 1) return u1;
    if ((beta == 1 || beta == 4) && j == 1) return s1;
    if ((beta == 1 || beta == 4) && j == 2) return s2;
    if (beta == 2 && j == 2)
        throw Error(Errc::unsupported_order,
                    "beta = 2 has three equations, not enough for the second correction");
    throw Error(Errc::unsupported_order, "generating-function tables cover j = 1, 2 only");
}

}  // namespace softedge
