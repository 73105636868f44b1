#include "bbd/digraph.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bbd {

std::string Vertex::name() const {
  return (part == Part::X ? "x" : "y") + std::to_string(index);
}

Vertex Vertex::parse(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
    throw DigraphError("bad vertex name '" + std::string(name) + "'");
  int index = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || index < 0)
    throw DigraphError("bad vertex name '" + std::string(name) + "'");
  return Vertex{name[0] == 'x' ? Part::X : Part::Y, index};
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.name(); }

VertexSet VertexSet::full(int a) {
  VertexSet s;
  s.xs = s.ys = a >= 32 ? ~0u : ((1u << a) - 1);
  return s;
}

int VertexSet::size() const { return std::popcount(xs) + std::popcount(ys); }

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Part p : {Part::X, Part::Y})
    for (auto m = mask(p); m; m &= m - 1) out.push_back(Vertex{p, std::countr_zero(m)});
  return out;
}

ParseError::ParseError(int line, const std::string& what)
    : DigraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

BipartiteDigraph BipartiteDigraph::empty(int a) {
  if (a < 1 || a > kMaxHalfOrder)
    throw DigraphError("invalid half-order " + std::to_string(a) + " (need 1 <= a <= " +
                       std::to_string(kMaxHalfOrder) + ")");
  BipartiteDigraph d;
  d.a_ = a;
  return d;
}

ArcCode BipartiteDigraph::code(int xi, int yj) const {
  int c = ((x_out_[xi] >> yj) & 1u) | (((y_out_[yj] >> xi) & 1u) << 1);
  return static_cast<ArcCode>(c);
}

bool BipartiteDigraph::has_arc(Vertex from, Vertex to) const {
  if (from.part == to.part || !contains(from) || !contains(to)) return false;
  return (out_row(from) >> to.index) & 1u;
}

Degree BipartiteDigraph::degree(Vertex v) const {
  Degree d;
  d.out = std::popcount(out_row(v));
  d.in = std::popcount(in_row(v));
  d.total = d.out + d.in;
  return d;
}

Degree BipartiteDigraph::degree_to_set(Vertex v, const VertexSet& s) const {
  auto m = s.mask(opposite(v.part));
  Degree d;
  d.out = std::popcount(out_row(v) & m);
  d.in = std::popcount(in_row(v) & m);
  d.total = d.out + d.in;
  return d;
}

std::pair<int, int> BipartiteDigraph::arcs_between(const VertexSet& a, const VertexSet& b) const {
  if (a.intersects(b)) throw DigraphError("arcs_between: sets are not disjoint");
  int forward = 0;
  int backward = 0;
  for (const auto& v : a.members()) {
    auto d = degree_to_set(v, b);
    forward += d.out;
    backward += d.in;
  }
  return {forward, backward};
}

BipartiteDigraph BipartiteDigraph::swapped() const {
  BipartiteDigraph d = *this;
  std::swap(d.x_out_, d.y_out_);
  std::swap(d.x_in_, d.y_in_);
  return d;
}

bool operator==(const BipartiteDigraph& l, const BipartiteDigraph& r) {
  if (l.a_ != r.a_) return false;
  for (int i = 0; i < l.a_; ++i)
    if (l.x_out_[i] != r.x_out_[i] || l.y_out_[i] != r.y_out_[i]) return false;
  return true;
}

DigraphBuilder::DigraphBuilder(int a) : d_(BipartiteDigraph::empty(a)) {}

void DigraphBuilder::check(Vertex v) const {
  if (!d_.contains(v))
    throw DigraphError("vertex " + v.name() + " out of range for half-order " +
                       std::to_string(d_.a_));
}

DigraphBuilder& DigraphBuilder::add_arc(Vertex from, Vertex to) {
  check(from);
  check(to);
  if (from.part == to.part)
    throw DigraphError("arc " + from.name() + "->" + to.name() + " joins vertices of the same part");
  if (d_.has_arc(from, to)) return *this;
  if (from.part == Part::X) {
    d_.x_out_[from.index] |= 1u << to.index;
    d_.y_in_[to.index] |= 1u << from.index;
  } else {
    d_.y_out_[from.index] |= 1u << to.index;
    d_.x_in_[to.index] |= 1u << from.index;
  }
  ++d_.arc_count_;
  return *this;
}

DigraphBuilder& DigraphBuilder::set_code(int xi, int yj, ArcCode c) {
  check(x(xi));
  check(y(yj));
  auto drop = [&](Vertex from, Vertex to) {
    if (!d_.has_arc(from, to)) return;
    if (from.part == Part::X) {
      d_.x_out_[from.index] &= ~(1u << to.index);
      d_.y_in_[to.index] &= ~(1u << from.index);
    } else {
      d_.y_out_[from.index] &= ~(1u << to.index);
      d_.x_in_[to.index] &= ~(1u << from.index);
    }
    --d_.arc_count_;
  };
  auto bits = static_cast<int>(c);
  if (bits & 1) add_arc(x(xi), y(yj)); else drop(x(xi), y(yj));
  if (bits & 2) add_arc(y(yj), x(xi)); else drop(y(yj), x(xi));
  return *this;
}

GlobalAdjacency::GlobalAdjacency(const BipartiteDigraph& d) : n(d.order()) {
  for (int id = 0; id < n; ++id) {
    auto v = Vertex::from_id(id);
    int shift = v.part == Part::X ? 1 : 0;  // neighbours live in the other part
    for (auto m = d.out_row(v); m; m &= m - 1) out[id] |= 1ull << (2 * std::countr_zero(m) + shift);
    for (auto m = d.in_row(v); m; m &= m - 1) in[id] |= 1ull << (2 * std::countr_zero(m) + shift);
  }
}

void add_complete(DigraphBuilder& b, const std::vector<int>& xs, const std::vector<int>& ys) {
  for (int i : xs)
    for (int j : ys) b.add_two_cycle(x(i), y(j));
}

std::string serialize(const BipartiteDigraph& d) {
  std::string out = "bbd " + std::to_string(d.half_order()) + "\n";
  for (int i = 0; i < d.half_order(); ++i) {
    for (int j = 0; j < d.half_order(); ++j)
      out.push_back(static_cast<char>('0' + static_cast<int>(d.code(i, j))));
    out.push_back('\n');
  }
  return out;
}

BipartiteDigraph parse(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) throw ParseError(line_no, "missing trailing newline");
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line[0] == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw ParseError(line_no + 1, "missing 'bbd <a>' header");

  auto [hdr_line, hdr] = lines.front();
  if (hdr.substr(0, 4) != "bbd ") throw ParseError(hdr_line, "expected header 'bbd <a>'");
  auto num = hdr.substr(4);
  int a = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), a);
  if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() || num[0] == '0')
    throw ParseError(hdr_line, "malformed half-order '" + std::string(num) + "'");
  if (a < 1 || a > kMaxHalfOrder)
    throw ParseError(hdr_line, "half-order " + std::to_string(a) + " out of range");

  if (static_cast<int>(lines.size()) - 1 != a) {
    int at = static_cast<int>(lines.size()) - 1 > a ? lines[a + 1].first : line_no + 1;
    throw ParseError(at, "expected " + std::to_string(a) + " rows, found " +
                             std::to_string(lines.size() - 1));
  }

  DigraphBuilder b(a);
  for (int i = 0; i < a; ++i) {
    auto [ln, row] = lines[i + 1];
    if (static_cast<int>(row.size()) != a)
      throw ParseError(ln, "row has " + std::to_string(row.size()) + " characters, expected " +
                               std::to_string(a));
    for (int j = 0; j < a; ++j) {
      char c = row[j];
      if (c < '0' || c > '3')
        throw ParseError(ln, std::string("illegal arc code '") + c + "' in column " +
                                 std::to_string(j));
      b.set_code(i, j, static_cast<ArcCode>(c - '0'));
    }
  }
  return b.build();
}

BipartiteDigraph read_digraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DigraphError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string format_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out.push_back(' ');
    out += v.name();
  }
  return out;
}

std::vector<Vertex> parse_vertices(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto sp = text.find_first_of(" \n", pos);
    if (sp == std::string_view::npos) sp = text.size();
    if (sp > pos) out.push_back(Vertex::parse(text.substr(pos, sp - pos)));
    pos = sp + 1;
  }
  return out;
}

}  // namespace bbd
