#pragma once

// Published per-eigenvector weighted distances of one test frame against 24
// database signs, with the printed row sums.

#include <array>
#include <string_view>

namespace islrec::fixture {

struct WeightedRow {
    std::string_view symbol;
    std::array<double, 5> terms;
    double printed_sum;
};

inline constexpr std::array<WeightedRow, 24> kWeightedRows{{
    {"A", {1.5222, 5.2195, 1.7085, 0.3343, 0.0008}, 8.7853},
    {"B", {0.0663, 0.0852, 0.9029, 0.3995, 0.0713}, 1.5252},
    {"C", {3.5017, 0.4849, 2.4430, 0.7793, 0.0005}, 7.2094},
    {"D", {2.6072, 0.9669, 2.0515, 0.3732, 0.7585}, 6.7573},
    {"E", {1.1572, 1.4187, 2.6283, 1.7608, 0.3713}, 7.3363},
    {"F", {1.4314, 0.5373, 2.1742, 1.2409, 0.3484}, 5.7322},
    {"G", {6.8007, 1.8617, 5.1714, 1.5333, 0.8005}, 16.1676},
    {"I", {0.1137, 1.5154, 2.6893, 0.0671, 0.7337}, 5.1192},
    {"K", {6.0554, 5.5240, 0.6496, 0.5386, 0.4044}, 13.172},
    {"L", {0.8418, 1.9064, 2.8906, 1.8512, 0.6212}, 8.1112},
    {"M", {1.0951, 4.0791, 0.9159, 0.2208, 2.1370}, 8.4479},
    {"N", {1.3116, 1.4438, 1.1714, 1.6105, 0.4341}, 5.9714},
    {"O", {1.1226, 0.1808, 2.2131, 0.1278, 0.1857}, 3.8300},
    {"P", {4.0148, 1.0833, 0.8182, 0.5821, 0.2839}, 6.7823},
    {"Q", {6.4535, 4.0007, 2.0588, 0.1288, 0.1052}, 12.747},
    {"R", {0.7353, 1.7165, 1.6045, 1.0081, 0.1000}, 5.1644},
    {"S", {7.8506, 2.2420, 0.8310, 0.5543, 0.3873}, 11.8652},
    {"T", {1.3719, 2.9341, 2.5987, 1.6969, 0.5597}, 9.1613},
    {"U", {1.0822, 3.3901, 2.7790, 0.5545, 0.1775}, 7.9833},
    {"V", {3.2136, 6.8409, 3.3667, 0.7386, 0.0737}, 14.2335},
    {"W", {5.3181, 1.8345, 0.2591, 1.3791, 0.0003}, 8.7911},
    {"X", {2.4952, 0.8294, 3.2854, 0.3123, 0.2766}, 7.1989},
    {"Y", {9.6108, 1.8892, 1.9481, 0.3101, 0.2358}, 13.994},
    {"Z", {1.3720, 0.7915, 4.3744, 1.7377, 0.1960}, 8.4716},
}};

inline constexpr std::string_view kRecognized = "B";
inline constexpr double kRecognizedScore = 1.5252;
inline constexpr double kPrintTolerance = 0.00005;

}  // namespace islrec::fixture
