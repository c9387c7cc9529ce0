#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rackkit/duality.hpp"
#include "rackkit/dynamics.hpp"
#include "rackkit/fingroup.hpp"
#include "rackkit/rack.hpp"
#include "rackkit/repr.hpp"

namespace rackkit {

/// Whitespace-separated tokens of a text file. '#' starts a comment to end of line.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in);
  static TokenReader from_file(const std::string& path);

  bool done() const noexcept { return pos_ == tokens_.size(); }
  const std::string& next();
  std::size_t next_size();
  Elem next_elem(std::size_t bound);
  mpq_class next_rational();
  /// Throws Error(ParseError) if tokens remain.
  void expect_end() const;

 private:
  TokenReader() = default;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

/// Line 1: order n; then n rows of the Cayley table.
FiniteGroup read_group(TokenReader& in);
void write_group(std::ostream& out, const FiniteGroup& g);

/// Line 1: size n; row x lists x ▷ 0, ..., x ▷ (n−1).
FiniteRack read_rack(TokenReader& in);
void write_rack(std::ostream& out, const FiniteRack& x);

/// Header "set_size |X|", then set_size rows giving m·0, ..., m·(|X|−1).
RackAction read_action(TokenReader& in, const FiniteRack& x);
void write_action(std::ostream& out, const RackAction& a);

/// Header "|X| |Q|", then |X|² blocks (x-major) of |Q|×|Q| tables of ∂_{x,y}.
TwistedSystem read_cocycle(TokenReader& in, const FiniteRack& x, const FiniteRack& q, const RackAction& a);
void write_cocycle(std::ostream& out, const TwistedSystem& t);

/// Header "|X| carrier", then |X|² blocks (x-major) of carrier×carrier tables of ★_x^y.
BundleOfRacks read_bundle(TokenReader& in, const FiniteRack& x);
void write_bundle(std::ostream& out, const BundleOfRacks& b);

/// Header "|X| d k", then per element d rows of d scalars, each scalar written
/// as its φ(k) rational coefficients in the power basis.
RackRep read_rep(TokenReader& in, const FiniteRack& x);
void write_rep(std::ostream& out, const RackRep& r);

/// Line 1: path of the rack file; line 2: orbit count; then one value per orbit.
struct CharacterFile {
  std::string rack_path;
  std::vector<QZ> values;
};
CharacterFile read_character(TokenReader& in);
void write_character(std::ostream& out, const std::string& rack_path, const RackCharacter& c);

/// "(a,b,c)".
std::string format_tuple(std::span<const Elem> t);
/// "{0,2} {1,3}".
std::string format_partition(const Partition& p);

}  // namespace rackkit
