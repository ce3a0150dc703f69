#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Embedded reference data for the `reproduce` fixtures: the element/DNA
// correspondence table, the worked construction examples, and the 256-entry
// decimal listing, stored exactly as printed in the reference tables.

namespace dnacyclic::fixtures {

// fixture: table1 (element, first Gray coordinate, second Gray coordinate,
// DNA pair), in reference row order
struct Table1Row {
  std::string_view element, gray_first, gray_second, dna;
};
inline constexpr std::array<Table1Row, 16> kTable1 = {{
    {"0", "0", "0", "AA"},
    {"v", "0", "1", "AG"},
    {"uv", "0", "u", "AT"},
    {"v+uv", "0", "1+u", "AC"},
    {"1", "1", "1", "GG"},
    {"1+v", "1", "0", "GA"},
    {"1+uv", "1", "1+u", "GC"},
    {"1+v+uv", "1", "u", "GT"},
    {"u", "u", "u", "TT"},
    {"u+v", "u", "1+u", "TC"},
    {"u+uv", "u", "0", "TA"},
    {"u+v+uv", "u", "1", "TG"},
    {"1+u", "1+u", "1+u", "CC"},
    {"1+u+v", "1+u", "u", "CT"},
    {"1+u+uv", "1+u", "1", "CG"},
    {"1+u+v+uv", "1+u", "0", "CA"},
}};

// fixture: eq7
inline constexpr std::string_view kEq7Word = "1,v,u,u+v";
inline constexpr std::string_view kEq7Dna = "GATTGGTC";

// fixture: ex3.9 -- length-8 code with components (g1+up1), (g2+up2)
inline constexpr size_t kEx39N = 8;
inline constexpr std::string_view kEx39G1 = "x^6+x^4+x^2+1";  // (x+1)^6
inline constexpr std::string_view kEx39P1 = "x^5+x";
inline constexpr std::string_view kEx39G2 = "x^4+1";          // (x+1)^4
inline constexpr std::string_view kEx39P2 = "x^3+x";
inline constexpr std::string_view kEx39F =
    "1,u,v,u+uv,1,uv,v,0";  // v(g1+up1) + (1+v)(g2+up2) as a word
inline constexpr std::string_view kEx39FRev = "0,v,uv,1,u+uv,v,u,1";
inline constexpr std::string_view kEx39Multiplier = "(v)x+(1+v)x^3";

// fixture: ex4.3 -- sigma set for n = 9
inline constexpr size_t kEx43N = 9;
inline constexpr std::string_view kEx43F1 = "x+1";
inline constexpr std::string_view kEx43F2 = "x^6+x^3+1";
inline constexpr std::string_view kEx43SigmaH = "x^6+(1+v)x^5+(v)x^3+(v)";
inline constexpr std::array<std::string_view, 6> kEx43Matrix = {{
    "1,v,0,1+v,0,0,1+v,0,0",
    "v,0,0,v,0,1+v,1,0,0",
    "0,1,v,0,1+v,0,0,1+v,0",
    "0,v,0,0,v,0,1+v,1,0",
    "0,0,1,v,0,1+v,0,0,1+v",
    "0,0,v,0,0,v,0,1+v,1",
}};
inline constexpr std::string_view kEx43Alpha = "0,1,u";
inline constexpr std::string_view kEx43Beta = "0,1,v";
inline constexpr std::string_view kEx43C1 = "0,1+v,u,uv,1,u+v+uv,1+v,v,u+v+uv";
inline constexpr std::string_view kEx43PhiC1 = "AGTAGTGATAATTGGAGG";
inline constexpr std::string_view kEx43C2 = "1+v+uv,1+v,v,1+v+uv,1,u+uv,u,v,0";
inline constexpr std::string_view kEx43PhiC2 = "GGAGGTTAATAGTGATGA";

// fixture: ex4.5 -- sigma set for n = 7
inline constexpr size_t kEx45N = 7;
inline constexpr std::string_view kEx45F1 = "x+1";
inline constexpr std::string_view kEx45F2 = "x^6+x^5+x^4+x^3+x^2+x+1";

// fixture: ex5.6 / table2 -- length-3 code, both components (g, ua) with
// g = a = x^2+x+1; the 16 image strings in reference row-major order
inline constexpr size_t kEx56N = 3;
inline constexpr std::string_view kEx56G = "x^2+x+1";
inline constexpr std::array<std::string_view, 16> kTable2 = {{
    "AAAAAA", "GGGGGG", "TTTTTT", "CCCCCC",
    "AAAGGG", "GGGAAA", "TTTCCC", "CCCTTT",
    "AAATTT", "GGGCCC", "TTTAAA", "CCCGGG",
    "AAACCC", "GGGTTT", "TTTGGG", "CCCAAA",
}};

// fixture: ex5.7 -- sigma set for n = 8 with f1 = f2
inline constexpr size_t kEx57N = 8;
inline constexpr std::string_view kEx57F1 = "x^6+x^4+x^2+1";
inline constexpr std::string_view kEx57SampleDna = "ACACACACGGGGGGGG";
inline constexpr uint64_t kEx57SampleDecimal = 859024042;

// fixture: table3 -- the 256 printed decimals, verbatim (row-major)
inline constexpr std::array<uint64_t, 256> kTable3 = {{
    0, 8738, 4369, 13107, 572662306, 572653568, 572666675, 572657937,
    286331153, 286339891, 286326784, 286335522, 858993459, 858984721, 858989090, 858980388,
    34952, 43690, 39321, 48059, 572697258, 572688520, 572701627, 572692889,
    286366105, 286374843, 286361736, 286390474, 859028411, 859019673, 859024042, 859015304,
    17476, 26214, 21845, 30583, 572679782, 572671044, 572684151, 572675413,
    286348629, 286357367, 286344260, 286352998, 859010935, 859002197, 859006566, 858997828,
    52428, 61166, 56797, 65535, 572714734, 572705996, 572719103, 572710365,
    286383581, 286392319, 286379212, 286387950, 859045887, 859037149, 859041518, 859032780,
    2290649224, 2290657962, 2290653593, 2290662331, 2863311530, 2863302792, 2863315899, 2863307161,
    2576980377, 2576989115, 2576976008, 2576984746, 3149642683, 3149633945, 3149638314, 3149629576,
    2290614272, 2290623010, 2290618641, 2290627379, 2863276578, 2863267840, 2863280947, 2863272209,
    2576945425, 2576954163, 2576941056, 2576949794, 3149607731, 3149598993, 3149603362, 3149594624,
    2290666700, 2290675438, 2290671069, 2290679807, 2863329006, 2863320268, 2863333375, 2863324637,
    2576997853, 2577006591, 2576993484, 2577002222, 3149660159, 3149651421, 3149655790, 3149647052,
    2290631748, 2290640486, 2290636117, 2290644855, 2863294054, 2863285316, 2863298423, 2863289685,
    2576962901, 2576971639, 2576958532, 2576967270, 3149625207, 3149616469, 3149620838, 3149612100,
    1145324612, 1145333350, 1145328981, 1145337719, 1717986918, 1717978180, 1717991287, 1717982549,
    1431655765, 1431664503, 1431651396, 1431660134, 2004318071, 2004309333, 2004313702, 2004304964,
    1145359564, 1145368302, 1145363933, 1145372671, 1718021870, 1718013132, 1718026239, 1718017501,
    1431690717, 1431699455, 1431686348, 1431695086, 2004353023, 2004344285, 2004348654, 2004339916,
    1145307136, 1145315874, 1145311505, 1145320243, 1717969442, 1717960704, 1717973811, 1717965073,
    1431638289, 1431647027, 1431633920, 1431642658, 2004300595, 2004291857, 2004296226, 2004287488,
    1145342088, 1145350826, 1145346457, 1145355195, 1718004394, 1717995656, 1718008763, 1718000025,
    1431673241, 1431681979, 1431668872, 1431677610, 2004335547, 2004326809, 2004331178, 2004322440,
    3435973836, 3435982574, 3435978205, 3435986943, 4008636142, 4008627404, 4008640511, 4008631773,
    3722304989, 3722313727, 3722300620, 3722309358, 4294967295, 4294958557, 4294962926, 4294954188,
    3435938884, 3435947622, 3435943253, 3435951991, 4008601190, 4008592452, 4008605559, 4008596821,
    3722270037, 3722278775, 3722265668, 3722274406, 4294932343, 4294923605, 4294927974, 4294919236,
    3435956360, 3435965098, 3435960729, 3435969467, 4008618666, 4008609928, 4008623035, 4008614297,
    3722287513, 3722296251, 3722283144, 3722291882, 4294949819, 4294941081, 4294945450, 4294936712,
    3435921408, 3435930146, 3435925777, 3435934515, 4008583714, 4008574976, 4008588083, 4008579345,
    3722252561, 3722261299, 3722248192, 3722256930, 4294914867, 4294906129, 4294910498, 4294901760,
}};

}  // namespace dnacyclic::fixtures
