#pragma once

// Bundled data, byte-identical to the files under data/: the conflict
// collections G (27 graphs) and H (22 graphs) as edge lists, the 12-point
// 11-universal set, the 17-point set for 4-connected graphs, and the n=3
// seed order type.

#include <array>
#include <cstdint>
#include <string_view>

namespace ust::data {

inline constexpr std::string_view conflict_g =
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 7 1 8 1 9 2 3 2 5 2 6 2 7 2 9 2 10 3 4 3 5 3 10 4 5 5 6 5 10 6 7 7 8 7 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 7 1 8 1 9 2 3 2 6 2 7 2 9 3 4 3 5 3 6 3 10 4 5 5 6 5 10 6 7 6 10 7 8 7 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 7 1 8 2 3 2 6 2 7 2 9 2 10 3 4 3 5 3 6 3 10 4 5 5 6 6 7 6 9 6 10 7 8 7 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 7 1 9 2 3 2 6 2 7 2 10 3 4 3 6 4 5 4 6 5 6 6 7 6 10 7 8 7 9 7 10 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 4 1 8 1 9 1 10 2 3 3 4 4 5 4 8 4 10 5 6 5 8 6 7 6 8 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 8 2 3 2 4 2 5 2 8 3 4 4 5 5 6 5 8 5 9 6 7 6 8 6 9 6 10 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 4 1 5 1 7 1 8 1 9 1 10 2 3 2 4 3 4 4 5 4 10 5 6 5 7 5 10 6 7 7 8 7 9 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 4 1 5 1 7 1 8 1 9 2 3 2 4 3 4 4 5 4 9 5 6 5 7 5 9 5 10 6 7 6 10 7 8 7 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 5 1 7 1 8 1 9 2 3 2 9 3 4 3 5 3 9 3 10 4 5 4 10 5 6 5 7 5 10 6 7 7 8\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 5 1 7 1 8 1 9 1 10 2 3 3 4 3 5 3 10 4 5 5 6 5 7 5 9 5 10 6 7 7 8 7 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 4 1 7 1 8 1 9 2 3 3 4 4 5 4 6 4 7 5 6 6 7 7 8 7 9 7 10 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 4 1 5 1 6 1 8 2 3 2 4 2 9 3 4 3 9 4 5 4 9 5 6 6 7 6 8 6 10 7 8 7 10 8 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 5 1 8 1 9 2 3 3 4 3 5 3 9 4 5 5 6 5 8 5 9 5 10 6 7 6 8 6 10 7 8 8 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 4 1 5 1 7 1 8 1 9 2 3 2 4 2 10 3 4 3 10 4 5 4 10 5 6 5 7 5 9 6 7 7 8 7 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 1 2 1 5 1 7 1 8 2 3 2 4 2 5 3 4 4 5 5 6 5 7 5 8 5 9 6 7 7 8 7 9 7 10 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 1 2 1 6 2 3 2 6 3 4 3 5 3 6 3 7 4 5 4 7 4 8 4 9 4 10 5 6 5 7 5 8 5 9 5 10 7 8 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 5 1 7 1 8 1 9 2 3 3 4 3 5 3 10 4 5 4 10 5 6 5 7 5 10 6 7 7 8 7 9 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 8 1 9 2 3 2 8 3 4 3 8 4 5 4 8 5 6 5 7 5 8 5 10 6 7 7 8 7 10 8 9 8 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 8 1 9 2 3 2 4 2 5 2 8 2 10 3 4 4 5 5 6 5 7 5 8 5 10 6 7 7 8 8 9 8 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 1 2 1 3 1 4 1 7 1 8 2 3 2 8 2 9 3 4 3 8 3 9 3 10 4 5 4 7 5 6 5 7 6 7 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 1 2 1 6 1 7 1 8 1 9 2 3 2 6 2 7 2 9 2 10 3 4 3 5 3 6 4 5 5 6 6 7 7 8 7 9 7 10 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 6 1 8 2 3 2 4 2 5 2 6 2 9 2 10 3 4 4 5 5 6 5 10 6 7 6 8 6 9 6 10 7 8 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 8 2 3 2 4 2 5 2 8 2 9 2 10 3 4 4 5 5 6 5 8 5 10 6 7 6 8 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 6 1 8 1 9 1 10 2 3 2 4 2 6 2 10 3 4 4 5 4 6 5 6 6 7 6 8 6 10 7 8 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 8 1 9 2 3 2 4 2 5 2 8 2 9 2 10 3 4 4 5 5 6 5 8 5 10 6 7 6 8 7 8 8 9 8 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 4 1 9 2 3 2 4 3 4 4 5 4 6 4 7 4 9 4 10 5 6 6 7 7 8 7 9 7 10 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 4 1 8 1 9 2 3 3 4 4 5 4 6 4 7 4 8 4 9 4 10 5 6 6 7 7 8 8 9 8 10 9 10\n";

inline constexpr std::string_view conflict_h =
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 6 1 9 1 10 2 3 2 6 2 10 3 4 3 5 3 6 4 5 5 6 6 7 6 9 6 10 7 8 7 9 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 1 2 1 3 1 4 1 5 1 7 1 8 2 3 3 4 4 5 5 6 5 7 5 8 5 9 5 10 6 7 6 10 7 8 7 9 7 10 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 3 1 8 1 10 2 3 3 4 3 5 3 8 4 5 5 6 5 8 6 7 6 8 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 3 1 4 1 10 2 3 3 4 4 5 4 7 4 10 5 6 5 7 6 7 7 8 7 9 7 10 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 6 1 7 1 9 1 10 2 3 2 4 2 6 3 4 4 5 4 6 5 6 6 7 7 8 7 9 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 4 1 9 1 10 2 3 2 4 3 4 4 5 4 6 4 7 4 9 4 10 5 6 6 7 7 8 7 9 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 6 1 7 1 8 1 10 2 3 2 6 3 4 3 5 3 6 4 5 5 6 6 7 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 3 1 10 2 3 3 4 3 5 3 6 3 7 3 8 3 9 3 10 4 5 5 6 6 7 7 8 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 5 1 6 1 10 2 3 2 4 2 5 3 4 4 5 5 6 6 7 6 9 6 10 7 8 7 9 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 9 1 10 2 3 2 4 2 5 2 8 2 9 3 4 4 5 5 6 5 8 6 7 6 8 7 8 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 5 1 8 1 9 1 10 2 3 2 4 2 5 3 4 4 5 5 6 5 8 6 7 6 8 7 8 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 1 2 1 4 1 5 1 7 1 8 1 9 2 3 2 4 3 4 4 5 5 6 5 7 5 10 6 7 6 10 7 8 7 10 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 4 1 7 1 8 2 3 3 4 4 5 4 6 4 7 4 9 4 10 5 6 5 10 6 7 6 9 6 10 7 8 7 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 3 1 5 1 7 1 9 1 10 2 3 3 4 3 5 4 5 5 6 5 7 6 7 7 8 7 9 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 10 2 3 2 10 3 4 3 5 3 10 4 5 5 6 5 7 5 8 5 10 6 7 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 10 2 3 2 10 3 4 3 6 3 10 4 5 4 6 5 6 6 7 6 8 6 10 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 3 1 4 1 5 1 6 1 10 2 3 3 4 4 5 5 6 6 7 6 8 6 9 6 10 7 8 8 9 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 3 1 6 1 8 1 9 2 3 3 4 3 5 3 6 3 9 3 10 4 5 5 6 5 10 6 7 6 8 6 9 6 10 7 8\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 5 1 6 1 7 1 8 1 9 2 3 2 4 2 5 3 4 4 5 5 6 6 7 7 8 7 9 7 10 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 0 9 0 10 1 2 1 4 1 6 1 8 1 10 2 3 2 4 3 4 4 5 4 6 5 6 6 7 6 8 7 8 8 9 8 10 9 10\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 5 1 6 1 8 1 9 2 3 2 4 2 5 2 10 3 4 3 10 4 5 4 10 5 6 6 7 6 8 6 9 7 8 8 9\n"
    "0 1 0 2 0 3 0 4 0 5 0 6 0 7 0 8 1 2 1 4 1 5 1 7 1 8 2 3 2 4 2 9 2 10 3 4 3 10 4 5 4 9 4 10 5 6 5 7 6 7 7 8 9 10\n";

inline constexpr std::string_view listing1 = "[(214,0),(0,13),(2,16),(9,26),(124,12),(133,11),(148,9),(213,1),(211,4),(210,6),(116,179),(122,197)]\n";

inline constexpr std::string_view listing2 = "[(612,666),(754,635),(415,709),(884,597),(596,695),(890,977),(384,716),(834,609),(424,707),(974, 10),(890,962),(306,805),(301,810),(4,736),(0,735),(975,6),(980,0)]\n";

inline constexpr std::array<std::uint8_t, 1> n3_order_types{0x00};

}  // namespace ust::data
