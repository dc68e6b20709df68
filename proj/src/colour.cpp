#include "operadix/colour.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "operadix/error.hpp"

namespace operadix {

Palette::Palette(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("palette must be nonempty");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw Error("palette colour names must be distinct");
}

int Palette::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return -1;
  return static_cast<int>(it - names_.begin());
}

Colouring::Colouring(PaletteRef palette, std::vector<int> values)
    : palette_(std::move(palette)), values_(std::move(values)) {
  if (!palette_) throw Error("colouring requires a palette");
  if (values_.empty()) throw Error("colouring must have length >= 1");
  for (int v : values_)
    if (v < 0 || v >= palette_->size())
      throw Error("colour index out of palette range");
}

std::string Colouring::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += palette_->name(values_[i]);
  }
  out += ")";
  return out;
}

Colouring compose_colouring(const Colouring& chi1, int l,
                            const Colouring& chi2) {
  if (*chi1.palette() != *chi2.palette())
    throw PaletteMismatchError("compose_colouring: palettes differ");
  const int n = chi1.size();
  const int m = chi2.size();
  if (l < 1 || l > n)
    throw Error("compose_colouring: position out of range");
  std::vector<int> out;
  out.reserve(n + m - 1);
  for (int k = 1; k <= n + m - 1; ++k) {
    if (k < l)
      out.push_back(chi1.at(k));
    else if (k < l + m)
      out.push_back(chi2.at(k - l + 1));
    else
      out.push_back(chi1.at(k - m + 1));
  }
  return Colouring(chi1.palette(), std::move(out));
}

Colouring standard_colouring(const PaletteRef& palette,
                             const std::vector<int>& weights) {
  if (static_cast<int>(weights.size()) > palette->size())
    throw Error("standard_colouring: more weights than colours");
  std::vector<int> out;
  for (size_t c = 0; c < weights.size(); ++c) {
    if (weights[c] < 0) throw Error("standard_colouring: negative weight");
    out.insert(out.end(), weights[c], static_cast<int>(c));
  }
  if (out.empty()) throw Error("standard_colouring: zero total weight");
  return Colouring(palette, std::move(out));
}

}  // namespace operadix
