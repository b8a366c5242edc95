#pragma once

#include "isozono/pl_graph.hpp"
#include "isozono/text_io.hpp"

#include <optional>
#include <string>

namespace isozono {

// One point per line, space-separated integers.

inline std::string write_lattice_set(const LatticeSet& s) {
  std::string out;
  for (const auto& p : s.points()) out += io::join(p) + "\n";
  return out;
}

/// Dimension comes from the first row unless given; an empty file needs it.
inline LatticeSet read_lattice_set(const std::string& text, std::optional<std::size_t> dim = std::nullopt) {
  io::LineReader in(text);
  std::vector<std::string> tok;
  std::vector<LatticePoint> pts;
  while (in.next(tok)) {
    if (!dim) dim = tok.size();
    if (tok.size() != *dim) in.fail("point needs " + std::to_string(*dim) + " coordinates");
    LatticePoint p;
    for (const auto& t : tok) p.push_back(in.int64(t));
    pts.push_back(std::move(p));
  }
  if (!dim) throw Error(ErrorKind::Parse, "empty point set with unknown dimension");
  try {
    return LatticeSet(*dim, std::move(pts));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace isozono
