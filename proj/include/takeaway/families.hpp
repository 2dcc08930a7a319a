#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "takeaway/graph.hpp"

namespace takeaway {

// Vertex conventions (all families):
//  Path(n): 0..n-1 in order.             Cycle(n): 0..n-1 around, n >= 2.
//  Wheel(n): hub 0, rim 1..n in order.
//  Fan(n): Wheel(n) without the rim edge n-1, so 1 and n have degree 2.
//  FanHandle(n): Wheel(n) without the rim edges (n-1)-n and n-1; vertex n is
//    the handle and the spokes are 0-1 .. 0-(n-1).
//  Q(n), odd n: hub 0, rim path 1..n-1, no spoke to (n+1)/2, isolated n.
//  R: cycle 0..c-1 with A = 0, B = c, then each path from B in turn.
//  ROdd: P = 0, then each cycle, then each path from P.
//  XYZ: P = 0, Q = 1, then linking paths, then P paths, then Q paths.
//  G1(n): c = 0 ends the tail, a = 1 and b = 2 have degree 3, d = 3, tail 4..n-1.
//  G2(n): path 0..n-1 with a loop at 0.
//  H(i, k): cycle 0,1,2 with A = 0, spine s1,s2,s3 = 3,4,5, side trees, then
//    the length-k path from s3.
//  Exceptional(i, j): K_i on 0..i-1 and K_j on 0, i..i+j-2.
namespace family {
struct Path { std::uint32_t n; };
struct Cycle { std::uint32_t n; };
struct Complete { std::uint32_t n; };
struct Multipartite { std::vector<std::uint32_t> parts; };
struct CompleteLoops { std::uint32_t n, m; };
struct Wheel { std::uint32_t n; };
struct Fan { std::uint32_t n; };
struct FanHandle { std::uint32_t n; };
struct FanHandleMinusSpokes { std::uint32_t n, s1, s2; };
struct Q { std::uint32_t n; };
struct R { std::uint32_t cycle_len; std::vector<std::uint32_t> xs; };
struct ROdd { std::vector<std::uint32_t> cycle_lens; std::vector<std::uint32_t> xs; };
struct XYZ { std::vector<std::uint32_t> xs, ys, zs; };
struct G1 { std::uint32_t n; };
struct G2 { std::uint32_t n; };
struct H { std::uint32_t i, k; };
struct Exceptional { std::uint32_t i, j; };
}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::Multipartite, family::CompleteLoops,
                 family::Wheel, family::Fan, family::FanHandle, family::FanHandleMinusSpokes, family::Q,
                 family::R, family::ROdd, family::XYZ, family::G1, family::G2, family::H, family::Exceptional>;

Graph generate(const FamilySpec& spec);

// Text form "name:args", e.g. "wheel:7", "r:3:7,6,5,3", "q:9",
// "exceptional:3,4", "xyz:2,1::3,3", "h:1:8". Empty lists are empty fields.
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

}  // namespace takeaway
