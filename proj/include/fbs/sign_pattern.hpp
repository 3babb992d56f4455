#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fbs/embedding.hpp"
#include "fbs/graph.hpp"

namespace fbs {

enum class Sign : char { in = '-', out = '+' };

/// Circular in/out sequence around a vertex, in rotation order.
using SignPattern = std::vector<Sign>;

enum class PatternClass { bipolar, irregular, alternating, other };

inline const char* to_string(PatternClass c) {
  switch (c) {
    case PatternClass::bipolar: return "bipolar";
    case PatternClass::irregular: return "irregular";
    case PatternClass::alternating: return "alternating";
    case PatternClass::other: return "other";
  }
  return "?";
}

inline SignPattern parse_pattern(const std::string& s) {
  SignPattern p;
  for (char c : s) {
    if (c == '-') p.push_back(Sign::in);
    else if (c == '+') p.push_back(Sign::out);
  }
  return p;
}

inline std::string to_string(const SignPattern& p) {
  std::string s;
  for (Sign x : p) s.push_back(static_cast<char>(x));
  return s;
}

inline SignPattern sign_pattern(const DiGraph& d, const Embedding& emb, VertexId v) {
  if (!d.alive(v)) throw graph_error("sign_pattern: vertex " + std::to_string(v) + " is not a live vertex");
  SignPattern p;
  for (const EdgeEnd& ee : emb.rotation.at(static_cast<std::size_t>(v)))
    p.push_back(ee.end == End::a ? Sign::out : Sign::in);
  return p;
}

/// Offset k such that rotating p left by k gives exactly `target`, or -1.
inline int rotation_offset(const SignPattern& p, const SignPattern& target) {
  const auto n = p.size();
  if (n != target.size()) return -1;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = p[(k + i) % n] == target[i];
    if (ok) return static_cast<int>(k);
  }
  return -1;
}

inline const SignPattern& irregular_in_pair() {
  static const SignPattern p = parse_pattern("--++-+");
  return p;
}
inline const SignPattern& irregular_out_pair() {
  static const SignPattern p = parse_pattern("++--+-");
  return p;
}

/// Classification up to cyclic rotation only; mirror images are not
/// identified, and the two irregular orders are accepted as listed.
inline PatternClass classify_pattern(const SignPattern& p) {
  const auto n = p.size();
  std::size_t changes = 0;
  for (std::size_t i = 0; i < n; ++i) changes += p[i] != p[(i + 1) % n] ? 1 : 0;
  if (changes <= 2) return PatternClass::bipolar;
  if (rotation_offset(p, irregular_in_pair()) >= 0 || rotation_offset(p, irregular_out_pair()) >= 0)
    return PatternClass::irregular;
  if (changes == n) return PatternClass::alternating;
  return PatternClass::other;
}

inline bool is_bipolar_embedding(const DiGraph& d, const Embedding& emb) {
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.alive(v) && classify_pattern(sign_pattern(d, emb, v)) != PatternClass::bipolar) return false;
  return true;
}

}  // namespace fbs
