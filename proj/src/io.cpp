#include "rackkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace rackkit {

TokenReader::TokenReader(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens_.push_back(line.substr(i, j - i));
      i = j;
    }
  }
}

TokenReader TokenReader::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return TokenReader(in);
}

const std::string& TokenReader::next() {
  if (done()) throw Error(ErrorKind::ParseError, "unexpected end of input", {pos_});
  return tokens_[pos_++];
}

std::size_t TokenReader::next_size() {
  const std::string& t = next();
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(ErrorKind::ParseError, "expected a non-negative integer, got '" + t + "'", {pos_ - 1});
  }
  return v;
}

Elem TokenReader::next_elem(std::size_t bound) {
  const std::size_t v = next_size();
  if (v >= bound) {
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(v) + " out of range", {pos_ - 1, v});
  }
  return static_cast<Elem>(v);
}

mpq_class TokenReader::next_rational() {
  const std::string& t = next();
  mpq_class q;
  if (t.empty() || q.set_str(t, 10) != 0 || (t.find('/') != std::string::npos && q.get_den() == 0)) {
    throw Error(ErrorKind::ParseError, "expected a rational, got '" + t + "'", {pos_ - 1});
  }
  q.canonicalize();
  return q;
}

void TokenReader::expect_end() const {
  if (!done()) throw Error(ErrorKind::ParseError, "trailing tokens after position " + std::to_string(pos_), {pos_});
}

namespace {

void write_rows(std::ostream& out, std::span<const Elem> table, std::size_t width) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table[i] << ((i + 1) % width == 0 ? '\n' : ' ');
  }
}

void check_header(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + " is " + std::to_string(got) + ", expected " + std::to_string(want), {got, want});
  }
}

}  // namespace

FiniteGroup read_group(TokenReader& in) {
  const std::size_t n = in.next_size();
  if (n == 0 || n > kMaxGroupOrder) throw Error(ErrorKind::SizeCapExceeded, "group order out of range", {n});
  std::vector<Elem> table(n * n);
  for (auto& v : table) v = in.next_elem(n);
  in.expect_end();
  return FiniteGroup::from_table(n, std::move(table));
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  write_rows(out, g.table(), g.order());
}

FiniteRack read_rack(TokenReader& in) {
  const std::size_t n = in.next_size();
  if (n == 0 || n > kDefaultRackCap) throw Error(ErrorKind::SizeCapExceeded, "rack size out of range", {n});
  std::vector<Elem> table(n * n);
  for (auto& v : table) v = in.next_elem(n);
  in.expect_end();
  return rack_validate(n, std::move(table));
}

void write_rack(std::ostream& out, const FiniteRack& x) {
  out << x.size() << '\n';
  write_rows(out, x.table(), x.size());
}

RackAction read_action(TokenReader& in, const FiniteRack& x) {
  const std::size_t m = in.next_size();
  check_header(in.next_size(), x.size(), "rack size in action header");
  if (m == 0 || m * x.size() > kMaxCocycleEntries) throw Error(ErrorKind::SizeCapExceeded, "action too large", {m});
  std::vector<Elem> table(m * x.size());
  for (auto& v : table) v = in.next_elem(m);
  in.expect_end();
  return action_validate(x, m, std::move(table));
}

void write_action(std::ostream& out, const RackAction& a) {
  out << a.set_size() << ' ' << a.rack().size() << '\n';
  write_rows(out, a.table(), a.rack().size());
}

TwistedSystem read_cocycle(TokenReader& in, const FiniteRack& x, const FiniteRack& q, const RackAction& a) {
  check_header(in.next_size(), x.size(), "base size in cocycle header");
  check_header(in.next_size(), q.size(), "fiber size in cocycle header");
  const std::size_t entries = x.size() * x.size() * q.size() * q.size();
  if (entries > kMaxCocycleEntries) throw Error(ErrorKind::SizeCapExceeded, "cocycle too large", {entries});
  std::vector<Elem> table(entries);
  for (auto& v : table) v = in.next_elem(q.size());
  in.expect_end();
  return cocycle_validate(x, q, a, std::move(table));
}

void write_cocycle(std::ostream& out, const TwistedSystem& t) {
  out << t.base().size() << ' ' << t.fiber().size() << '\n';
  write_rows(out, t.table(), t.fiber().size());
}

BundleOfRacks read_bundle(TokenReader& in, const FiniteRack& x) {
  check_header(in.next_size(), x.size(), "base size in bundle header");
  const std::size_t c = in.next_size();
  const std::size_t entries = x.size() * x.size() * c * c;
  if (c == 0 || entries > kMaxCocycleEntries) throw Error(ErrorKind::SizeCapExceeded, "bundle too large", {entries});
  std::vector<std::vector<Elem>> tables(x.size() * x.size(), std::vector<Elem>(c * c));
  for (auto& t : tables)
    for (auto& v : t) v = in.next_elem(c);
  in.expect_end();
  return bundle_validate(x, c, std::move(tables));
}

void write_bundle(std::ostream& out, const BundleOfRacks& b) {
  const std::size_t n = b.base().size();
  out << n << ' ' << b.carrier() << '\n';
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) write_rows(out, b.fiber(x, y).table(), b.carrier());
}

RackRep read_rep(TokenReader& in, const FiniteRack& x) {
  check_header(in.next_size(), x.size(), "rack size in representation header");
  const std::size_t d = in.next_size();
  const std::size_t k = in.next_size();
  if (d == 0 || d > 64) throw Error(ErrorKind::SizeCapExceeded, "dimension out of range", {d});
  if (k == 0 || k > kMaxConductor) throw Error(ErrorKind::InvalidArgument, "conductor out of range", {k});
  const CycloField& f = CycloField::get(static_cast<std::uint32_t>(k));
  std::vector<CMatrix> mats;
  for (Elem e = 0; e < x.size(); ++e) {
    CMatrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<mpq_class> coeffs(f.degree());
        for (auto& c : coeffs) c = in.next_rational();
        m.at(i, j) = Cyclo(f, std::move(coeffs));
      }
    }
    mats.push_back(std::move(m));
  }
  in.expect_end();
  return rep_validate(x, std::move(mats));
}

void write_rep(std::ostream& out, const RackRep& r) {
  const std::size_t d = r.dimension();
  out << r.rack().size() << ' ' << d << ' ' << r.field().conductor() << '\n';
  for (const auto& m : r.matrices()) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto& c = m.at(i, j).coeffs();
        for (std::size_t t = 0; t < c.size(); ++t) {
          if (j > 0 || t > 0) out << (t == 0 ? "  " : " ");
          out << c[t].get_str();
        }
      }
      out << '\n';
    }
  }
}

CharacterFile read_character(TokenReader& in) {
  CharacterFile out;
  out.rack_path = in.next();
  const std::size_t n = in.next_size();
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(QZ::parse(in.next()));
  in.expect_end();
  return out;
}

void write_character(std::ostream& out, const std::string& rack_path, const RackCharacter& c) {
  out << rack_path << '\n' << c.values().size() << '\n';
  for (std::size_t i = 0; i < c.values().size(); ++i) {
    out << c.values()[i].to_string() << (i + 1 == c.values().size() ? '\n' : ' ');
  }
}

std::string format_tuple(std::span<const Elem> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::string format_partition(const Partition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b > 0) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < p[b].size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(p[b][i]);
    }
    s += '}';
  }
  return s;
}

}  // namespace rackkit
