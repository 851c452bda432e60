// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Frozen reference values for the unit tests. Every constant here was
// evaluated independently at 50-digit working precision from the defining
// limit, series, or integral (not from this library's code paths) and then
// rounded to binary64. Tests compare against these within tolerances that
// reflect each algorithm's documented accuracy, so a regression in any code
// path shows up as a drift away from an externally pinned number.

namespace testref {

// Elementary constants.
inline constexpr double kGamma = 0.577215664901532860606512090082;
inline constexpr double kLog2 = 0.693147180559945309417232121458;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281;
inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334;
inline constexpr double kCatalan = 0.915965594177219015054603514932;

// Riemann zeta values away from the pole.
inline constexpr double kZetaHalf = -1.46035450880958681288949915252;
inline constexpr double kZeta32 = 2.61237534868548834334856756792;
inline constexpr double kZeta2 = 1.64493406684822643647241516665;  // pi^2/6
inline constexpr double kZeta3 = 1.20205690315959428539973816151;

// Stieltjes constants gamma_k, k = 0..10.
inline constexpr double kStieltjes[] = {
    0.577215664901532860606512090082,
    -0.0728158454836767248605863758749,
    -0.00969036319287231848453038603521,
    0.00205383442030334586616004654275,
    0.00232537006546730005746817017753,
    0.000793323817301062701753334877444,
    -0.000238769345430199609872421841908,
    -0.000527289567057751046074097505479,
    -0.000352123353803039509602052165001,
    -3.4394774418088048e-5,
    2.0533281490906479e-4,
};

// Generalized Euler constants gamma_k(a) for the Hurwitz zeta function.
inline constexpr double kHurwitzGamma0Half = 1.96351002602142347944097633300;  // gamma + 2 log 2
inline constexpr double kHurwitzGamma1Half = -1.35345968080494151770868716918;
inline constexpr double kHurwitzGamma2Half = 0.968864475220290711421711062324;
inline constexpr double kHurwitzGamma5Half = -0.320812026677865490224304534146;
inline constexpr double kHurwitzGamma0Quarter = 4.22745353337626540808953014610;
inline constexpr double kHurwitzGamma1Quarter = -5.51807635019940375269401104478;
inline constexpr double kHurwitzGamma0ThreeQuarters = 1.08586087978647216962688676282;
inline constexpr double kHurwitzGamma3Third = -3.98239479947116187618874035629;
inline constexpr double kHurwitzGamma4TwoThirds = 0.0397278869525733321336972178860;

// Hurwitz zeta values for the direct-integral evaluator.
inline constexpr double kHurwitzZeta2Half = 4.93480220054467930941724549994;  // pi^2/2
inline constexpr double kHurwitzZeta54Half = 6.33396752920820211272601575152;
inline constexpr double kHurwitzZeta32Quarter = 10.2130553604666007388828557102;

// Dirichlet L-function values; chi4, chi3, chi5 are the real non-principal
// characters of modulus 4, 3, 5 (Kronecker symbols for -4, -3, 5).
inline constexpr double kLChi4At1 = 0.785398163397448309615660845820;   // pi/4
inline constexpr double kLChi3At1 = 0.604599788078072616864692752547;   // pi/(3 sqrt 3)
inline constexpr double kLChi4At13 = 0.836752827803461747084355480529;
inline constexpr double kLChi4At07 = 0.720161443686704438668191547736;
inline constexpr double kLChi3At2 = 0.781302412896486253496191029981;
inline constexpr double kLChi5At1 = 0.430408940964004038889433232951;   // (2/sqrt 5) log phi
inline constexpr double kLChi5At32 = 0.587662839285828606976968214714;
inline constexpr double kGamma1Chi4 = -0.192901316796912429363189764028;
inline constexpr double kGamma1Chi3 = -0.222662986968601509486660262765;
inline constexpr double kGamma2Chi4 = -0.154141724429335883403954139824;

// Reciprocal-gamma Taylor coefficients 1/Gamma(s) = sum c_m s^m.
inline constexpr double kC3 = -0.6558780715202538810770195;
inline constexpr double kC4 = -0.04200263503409523552900393;
inline constexpr double kC16 = 6.116095104481415817862499e-9;

// Taylor coefficients B(n) of (2 pi)^s / Gamma(s) at s = 0, n = 1..8.
inline constexpr double kB[] = {
    1.0,
    4.83018546262175668833434312579,
    12.5632165019472359492134042769,
    18.2902192329472663824394415049,
    6.51007501020250500411408869810,
    -26.2950631152352771168121984873,
    -34.1640567569695879404372453383,
    38.2942803360813145975991201992,
};

// Upper incomplete gamma Gamma(s, a) and the log-weighted variants
// Gamma_ell(s, a) = integral_a^inf e^{-y} log^ell(y) y^{s-1} dy.
inline constexpr double kGamma12TwoPi = 38828779.7180447632506262998590;
inline constexpr double kGamma0TwoPi = 2.60420586396130586388464163143e-4;  // E1(2 pi)
inline constexpr double kE1At1 = 0.219383934395520273677163775460;
inline constexpr double kE1At50 = 3.78326402955045901869896785402e-24;
inline constexpr double kGammaHalf10 = 1.37262662354498576604977377126e-5;
inline constexpr double kGamma52At1 = 1.12880279188910228636323388371;
inline constexpr double kGammaNeg32At2 = 0.0118329941033459970907134654904;
inline constexpr double kGamma5At50 = 1.30792847590092704042239975237e-15;
inline constexpr double kGamma11At60 = 6.32948234356573740927979760444e-9;
inline constexpr double kLogGamma1_12TwoPi = 95656744.3455661198078590206842;
inline constexpr double kLogGamma1_0TwoPi = 5.11243020362141712574225193721e-4;
inline constexpr double kLogGamma2_12TwoPi = 238483808.162996760199795326578;
inline constexpr double kLogGamma1_5At50 = 5.14439144454029677139092535965e-15;

// Ramanujan tau(1..12), exact integers.
inline constexpr long kTau[] = {1,      -24,    252,     -1472,  4830,    -6048,
                                -16744, 84480,  -113643, -115920, 534612, -370944};

// Cusp-form side: W(y) = sum tau(n) e^{-2 pi n y}, the integral coefficients
// A(n,12), the Taylor coefficients C(n,12) of L(Delta, s) at s = 0, L(Delta, s)
// point values, and the completed-function value Lambda(4) = Lambda(8).
inline constexpr double kWAt1 = 0.00178536985064215190434305496034;
inline constexpr double kWAt2 = 3.48705048953545293817002921942e-6;
inline constexpr double kWAtHalf = 0.0142829588051372152347444396827;
inline constexpr double kWAtThird = 0.00346096227706928530785675525952;
inline constexpr double kA012 = 0.0104862731292411519696415202922;
inline constexpr double kA112 = -0.00638027294059216629143811862459;
inline constexpr double kA212 = 0.00476816087406992759691737462247;
inline constexpr double kC12[] = {
    0.0104862731292411519696415202922,
    0.0189450490723787186034,
    0.00893201623796605961778014900948,
    -0.000262896147101262266153136437594,
    -0.000732887224377019573212551323763,
    0.0000439603271806837883558102366261,
    0.0000359700783542292103426151047051,
};
inline constexpr double kLDeltaAt2 = 0.146374542091265989413000913275;
inline constexpr double kLDeltaAt01 = 0.00124697624889800058089946270717;
inline constexpr double kLambda4 = 0.00193109920049378400755375722549;

// Published Taylor coefficients of L(Delta, s) at s = 0, both columns of the
// table as printed (series method and numerical differentiation).
inline constexpr double kPublishedC112Series = 0.01048627312924116;
inline constexpr double kPublishedC112Derivative = 0.01048627312924115;
inline constexpr double kPublishedC212Series = 0.01894525791618929;
inline constexpr double kPublishedC212Derivative = 0.01894504907238154;

}  // namespace testref
