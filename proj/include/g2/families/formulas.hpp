#pragma once

#include <string_view>

// Closed-form polynomials of the subcover families, in SparsePolynomial
// syntax. Variables are listed beside each name.

namespace g2::formulas {

// a, c
inline constexpr std::string_view generic_A =
    "a^12 - 8*a^11 + 16*c^2*a^8 + 11664*c^2 + 36720*c^2*a^4 - 69984*c^2*a^3 - 192*c^2*a^7"
    " + 77760*c^2*a^2 - 46656*c^2*a + 1920*c^2*a^6 - 11232*c^2*a^5 - 4*a^10*c + 26*a^10"
    " - 44*a^9 + 41*a^8 - 20*a^7 + 220*a^8*c - 904*a^7*c + 1740*a^6*c - 1800*a^5*c - 8*a^9*c"
    " - 216*c*a^3 + 4*a^6 + 972*c*a^4";

// a, c
inline constexpr std::string_view generic_C =
    "a^6 - 4*a^5 + 5*a^4 - 2*a^3 - 32*a^3*c + 144*c*a^2 - 216*c*a + 108*c";

// a, c
inline constexpr std::string_view generic_B =
    "a^4 - 2*a^3 + a^2 - 24*c*a + 36*c";

// j1, w1; linear in j1
inline constexpr std::string_view degenerate_j1_relation =
    "2617344*w1^2 + 38637*j1*w1^7 - 17496*j1*w1^6 - 29207808*w1^5 - 7569408*w1^3"
    " - 7569408*w1^15 - 729*w1^4*j1 + 5103*j1*w1^5 + 69984*j1*w1^9 - 60507*j1*w1^8 + 65536"
    " - 589824*w1 + 16411392*w1^4 - 29207808*w1^13 + 44960208*w1^12 - 60666336*w1^11"
    " + 72010800*w1^10 + 44960208*w1^6 - 60666336*w1^7 + 72010800*w1^8 - 75998272*w1^9"
    " + 16411392*w1^14 + 2617344*w1^16 - 589824*w1^17 - 60507*j1*w1^10 + 38637*j1*w1^11"
    " - 17496*j1*w1^12 + 5103*j1*w1^13 - 729*j1*w1^14 + 65536*w1^18";

// j, w1; linear in j
inline constexpr std::string_view degenerate_j_relation =
    "65536*w1^6 - 196608*w1^5 + 356352*w1^4 - 385024*w1^3 + (289536 - 9*j)*w1^2 + (-129792"
    " + 9*j)*w1 + 35152 - 9*j";

// j
inline constexpr std::string_view pair_cubic_B =
    "-2187*j^7 + 38996640*j^6 - 277882258176*j^5 + 998642127618048*j^4"
    " - 1868045010870009856*j^3 + 1669509508048367910912*j^2 - 543484034691057422696448*j"
    " + 16612482057244821172518912";

// j
inline constexpr std::string_view pair_cubic_C =
    "27*j^8 + 1125216*j^7 + 9650655872*j^6 - 31593875152896*j^5 + 27748804997283840*j^4"
    " + 1114515284358510673920*j^3 - 6061989956030939246100480*j^2"
    " + 8346397859247767524611194880*j + 353019691006036487376293855232";

// j; D(j) is its cube
inline constexpr std::string_view pair_cubic_D_base =
    "j^3 + 33120*j^2 + 290490624*j - 310747594752";

// i1, i2
inline constexpr std::string_view absolutes_S =
    "247945848003*i1^3 - 409722141024*i1^2 - 7591354214400*i1 + 17736744960000"
    " + 61379512488*i1*i2 + 64268527400*i1^2*i2 - 2031496516224*i2";

// i1, i2
inline constexpr std::string_view absolutes_T =
    "1034723291140*i1^2*i2 - 3175485076512*i1*i2 - 7250280129792*i2 + 1670535171333*i1^3"
    " + 366156782208*i1^2 - 67382113075200*i1 + 141893959680000";

// u; B(u) = -16 * this * (2u^2-6u+5)^4
inline constexpr std::string_view deg5_B_inner =
    "-7105017544704*u^33 - 2816860828336128*u^31 + 175917390077952*u^32"
    " + 623116122491175945628520*u^12 + 165647363105986609 + 1071822623072391493632*u^24"
    " - 697664908494919962734400*u^13 + 10165770178171535328256*u^22"
    " - 3521178077017962627072*u^23 - 611366039933419582356480*u^15"
    " + 211088208801275293447168*u^18 - 117843339238828016262912*u^19"
    " - 337258769605584067064448*u^17 + 480799396622391815599360*u^16"
    " + 58612898603387517569664*u^20 + 139314069504*u^34 - 12909484419880734720*u^27"
    " - 284837487810868721664*u^25 + 65530387559293083648*u^26 + 40376325064521521748*u^2"
    " - 284029170057918018876*u^3 - 3711757861451181852*u - 5749828391735587589364*u^5"
    " + 1452158564376272108306*u^4 + 18345524820571264661416*u^6"
    " - 48457022965012856084616*u^7 + 108027612722856481764222*u^8"
    " - 206208961788595840640856*u^9 + 340743378168336968325408*u^10"
    " - 491546319356455960291344*u^11 - 25922857282984031345664*u^21"
    " + 692593865844403162989888*u^14 + 32784067604201472*u^30 + 2146611912787372032*u^28"
    " - 295513372833693696*u^29";

// u; C(u) = 256 * this^3
inline constexpr std::string_view deg5_C_inner =
    "186624*u^16 - 4478976*u^15 + 50512896*u^14 - 355332096*u^13 + 1744993152*u^12"
    " - 6343287552*u^11 + 17655393792*u^10 - 38378452608*u^9 + 65842249648*u^8"
    " - 89441495616*u^7 + 95875417216*u^6 - 80237127456*u^5 + 51388251464*u^4"
    " - 24345314544*u^3 + 8044840448*u^2 - 1656421080*u + 160064701";

// d, t; a = -this/(4A)
inline constexpr std::string_view deg7_a_num =
    "7*d^20 + 424*t^4*d^8 - 11072*d^12*t^3 + 2368*t^3*d^13 - 872*d^16*t^2 - 1532*d^17*t"
    " - 21568*d^14*t^2 - 56*d^19*t + 478*d^18*t + 36*t^5*d - 42*t^5*d^2 + 18160*t^3*d^11"
    " - 4356*t^3*d^10 - 624*t^4*d^6 + 8*t^5*d^3 - 736*t^4*d^7 - 52594*t^2*d^12 + 624*t*d^14"
    " - 2576*t*d^15 + 2725*t*d^16 + 736*t*d^13 - 36*d^19 - 2368*t^2*d^7 + 42*d^18"
    " + 6112*d^15*t^2 - 29576*t^3*d^9 - 7*t^5 + 52594*t^3*d^8 - 44496*t^3*d^7 + 2576*t^4*d^5"
    " - 2725*t^4*d^4 + 1532*t^4*d^3 + 56*t^4*d + 872*t^3*d^4 - 6112*t^3*d^5 - 478*t^4*d^2"
    " - 18160*d^9*t^2 - 424*d^12*t + 11072*d^8*t^2 - 8*d^17 + 44496*t^2*d^13 + 21568*t^3*d^6"
    " + 4356*d^10*t^2 + 29576*t^2*d^11";

// d, t; b = this/(16A)
inline constexpr std::string_view deg7_b_num =
    "-14*d^21 + 77*d^20 + 400*d^9*t^4 - 3496*t^4*d^8 + 94280*d^12*t^3 + 1680*t^3*d^14"
    " - 21232*t^3*d^13 + 1008*d^17*t^2 + 35*d^17*t + 31612*d^14*t^2 + 84*d^20*t - 616*d^19*t"
    " + 1313*d^18*t - 77*t^5*d + 121*t^5*d^2 - 10356*t^4*d^6 - 72*t^5*d^3 + 9016*t^4*d^7"
    " + 20*t^5*d^4 - 139344*t^2*d^13 + 269886*t^2*d^12 - 9016*t*d^14 - 5222*t*d^16"
    " + 3496*t*d^13 - 121*d^19 - 1680*t^2*d^7 - 20*d^17 + 72*d^18 + 5352*d^15*t^2"
    " - 269886*t^3*d^9 + 139344*t^3*d^8 - 31612*t^3*d^7 + 5222*t^4*d^5 - 35*t^4*d^4"
    " - 5352*t^3*d^6 - 1313*t^4*d^3 - 84*t^4*d - 1008*t^3*d^4 + 616*t^4*d^2 - 94280*d^9*t^2"
    " - 400*d^12*t + 21232*d^8*t^2 + 219712*d^10*t^2 - 308478*t^2*d^11 + 308478*t^3*d^10"
    " - 219712*t^3*d^11 + 5080*t^3*d^5 - 5080*d^16*t^2 + 10356*t*d^15 + 14*t^5";

// d, t; c = -this^2/(448A)
inline constexpr std::string_view deg7_c_inner =
    "28*d^11 - 7*d^12 - 561*d^4*t^2 - 1800*d^7*t + 84*d^10*t + 12*t^2*d + 364*t^2*d^3"
    " - 118*t^2*d^2 + t^3 + 20*d^9 + 120*t*d^4 - 608*t*d^5 + 1400*t*d^6 + 1311*t*d^8"
    " - 42*d^10 - 140*d^6*t^2 - 504*d^9*t + 440*d^5*t^2";

// d, t; A = d * first * second
inline constexpr std::string_view deg7_A_first =
    "90*d^4*t^2 - 36*d^7*t - 9*t^2*d - 84*t^2*d^3 + 36*t^2*d^2 + t^3 - d^9 + 36*t*d^4"
    " - 90*t*d^5 + 84*t*d^6 + 9*t*d^8 - 36*d^5*t^2";

// d, t
inline constexpr std::string_view deg7_A_second =
    "168*t*d^6 - t^2 - 168*t*d^5 - 20*t*d^3 + 6*t^2*d - 10*t^2*d^2 + 5*t^2*d^3 + 90*t*d^4"
    " - 90*d^7*t + 20*t*d^8 - 6*d^10 + d^11 + 10*d^9 - 5*d^8";

// d, t
inline constexpr std::string_view deg7_constraint =
    "d^16 - 16*(t*d^15 + t^3*d) + 120*t*d^14 - 560*t*d^13 + (400*t^2 + 1420*t)*d^12"
    " - (2400*t^2 + 1968*t)*d^11 + (6608*t^2 + 1400*t)*d^10 - (11040*t^2 + 400*t)*d^9"
    " + 12870*t^2*d^8 - (400*t^3 + 11040*t^2)*d^7 + 120*t^3*d^2 + (1400*t^3 + 6608*t^2)*d^6"
    " - (1968*t^3 + 2400*t^2)*d^5 + (1420*t^3 + 400*t^2)*d^4 - 560*t^3*d^3 + t^4";

}  // namespace g2::formulas
