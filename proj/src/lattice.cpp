#include "jumppath/lattice.hpp"

#include <charconv>

namespace jumppath {

bool LatticePoint::weakly_below(const LatticePoint& other) const {
  if (other.dimension() != dimension()) return false;
  bool strict = false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
    if (coords_[i] < other.coords_[i]) strict = true;
  }
  return strict;
}

bool LatticePoint::strictly_below(const LatticePoint& other) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] >= other.coords_[i]) return false;
  }
  return true;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

LatticePoint parse_point(const std::string& text) {
  std::vector<std::uint32_t> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw std::invalid_argument("invalid point coordinate '" + field + "' in '" + text + "'");
    }
    coords.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return LatticePoint(std::move(coords));
}

}  // namespace jumppath
