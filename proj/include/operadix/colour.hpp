#pragma once

#include <memory>
#include <string>
#include <vector>

namespace operadix {

/// Ordered list of distinct colour names. The order is fixed and used for
/// canonical serialization throughout the engine; internally colours are
/// handled as indices into the palette and names surface only at the
/// serialization boundary.
class Palette {
 public:
  explicit Palette(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int idx) const { return names_.at(idx); }
  const std::vector<std::string>& names() const { return names_; }

  /// Returns the index of `name`, or -1 when absent.
  int index_of(const std::string& name) const;

  bool operator==(const Palette& other) const { return names_ == other.names_; }
  bool operator!=(const Palette& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

using PaletteRef = std::shared_ptr<const Palette>;

inline PaletteRef make_palette(std::vector<std::string> names) {
  return std::make_shared<const Palette>(std::move(names));
}

/// Colour assignment for an ordered finite set of positions. Positions are
/// 1-based in all external text and 0-based internally.
class Colouring {
 public:
  Colouring(PaletteRef palette, std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  /// Colour at 1-based position `pos`.
  int at(int pos) const { return values_.at(pos - 1); }
  const std::vector<int>& values() const { return values_; }
  const PaletteRef& palette() const { return palette_; }

  bool operator==(const Colouring& other) const {
    return values_ == other.values_;
  }
  bool operator!=(const Colouring& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  PaletteRef palette_;
  std::vector<int> values_;
};

/// Partial composition of colourings: the colouring of the composite
/// ordered set obtained by inserting the second set at position `l`
/// (1-based) of the first. The result has length n + m - 1.
Colouring compose_colouring(const Colouring& chi1, int l, const Colouring& chi2);

/// The colouring that assigns colour 1 to the first m1 positions, colour 2
/// to the next m2, and so on, for a weight vector (m1..md).
Colouring standard_colouring(const PaletteRef& palette,
                             const std::vector<int>& weights);

}  // namespace operadix
