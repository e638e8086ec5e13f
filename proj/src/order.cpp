#include "vpl/order.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "vpl/error.hpp"

namespace vpl {

std::string_view to_string(Kind kind) { return kind == Kind::noun ? "noun" : "verb"; }

std::string_view to_string(Relation relation) {
  switch (relation) {
  case Relation::kind_of: return "kind_of";
  case Relation::part_of: return "part_of";
  case Relation::way_of: return "way_of";
  }
  return "?";
}

std::optional<Relation> relation_from_string(std::string_view text) {
  if (text == "kind_of") return Relation::kind_of;
  if (text == "part_of") return Relation::part_of;
  if (text == "way_of") return Relation::way_of;
  return std::nullopt;
}

Kind kind_of(Relation relation) {
  return relation == Relation::way_of ? Kind::verb : Kind::noun;
}

std::string normalize_identifier(std::string_view raw) {
  std::string out;
  bool pending_gap = false;
  for (char c : raw) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      pending_gap = !out.empty();
      continue;
    }
    if (pending_gap) out.push_back('_');
    pending_gap = false;
    out.push_back(static_cast<char>(std::tolower(uc)));
  }
  return out;
}

std::string to_string(const Literal &literal) {
  return literal.negated ? "not " + literal.id : literal.id;
}

void Preorder::add_atom(std::string_view id) {
  if (id.empty()) throw Error(ErrorCode::unknown_atom, "empty atom identifier");
  if (find(id)) return;
  std::size_t n = names_.size();
  names_.emplace_back(id);
  index_.emplace(std::string(id), n);
  up_.emplace_back();
  down_.emplace_back();
  for (auto &row : reach_) row.push_back(0);
  reach_.emplace_back(n + 1, 0);
  reach_[n][n] = 1;
  if (top_) reach_[n][*top_] = 1;
}

bool Preorder::contains(std::string_view id) const { return find(id).has_value(); }

void Preorder::set_top(std::string_view id) {
  add_atom(id);
  top_ = index_of(id);
  for (auto &row : reach_) row[*top_] = 1;
}

std::optional<std::string> Preorder::top() const {
  if (!top_) return std::nullopt;
  return names_[*top_];
}

bool Preorder::is_top(std::string_view id) const {
  auto i = find(id);
  return top_ && i && *i == *top_;
}

void Preorder::declare_relation(std::string_view lower, std::string_view upper, Relation label) {
  if (kind_of(label) != kind_) {
    throw Error(ErrorCode::kind_mismatch, std::string(to_string(label)) + " cannot relate " +
                                              std::string(to_string(kind_)) + "s");
  }
  std::size_t a = index_of(lower);
  std::size_t b = index_of(upper);
  Edge edge{names_[a], names_[b], label};
  if (std::find(edges_.begin(), edges_.end(), edge) != edges_.end()) return;
  edges_.push_back(edge);
  if (a == b) return;
  up_[a].push_back({b, label});
  down_[b].push_back({a, label});
  // Incremental closure: everything below a now reaches everything above b.
  std::size_t n = names_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!reach_[x][a]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (reach_[b][y]) reach_[x][y] = 1;
    }
  }
}

bool Preorder::leq(std::string_view lower, std::string_view upper) const {
  return reach_[index_of(lower)][index_of(upper)] != 0;
}

bool Preorder::leq(const Literal &a, const Literal &b) const {
  std::size_t x = index_of(a.id);
  std::size_t y = index_of(b.id);
  if (a.negated != b.negated) return false;
  return a.negated ? reach_[y][x] != 0 : reach_[x][y] != 0;
}

std::vector<Literal> Preorder::generalizations(const Literal &a) const {
  std::size_t x = index_of(a.id);
  std::vector<Literal> out;
  for (std::size_t y = 0; y < names_.size(); ++y) {
    bool related = a.negated ? reach_[y][x] : reach_[x][y];
    if (related) out.push_back(Literal{names_[y], a.negated});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Literal> Preorder::specializations(const Literal &a,
                                               std::optional<Relation> label) const {
  std::size_t x = index_of(a.id);
  std::vector<Literal> out;
  if (!label) {
    for (std::size_t y = 0; y < names_.size(); ++y) {
      bool related = a.negated ? reach_[x][y] : reach_[y][x];
      if (related) out.push_back(Literal{names_[y], a.negated});
    }
  } else {
    // Positive literals walk down the labelled edges, negated ones walk up.
    const auto &adjacency = a.negated ? up_ : down_;
    std::vector<char> seen(names_.size(), 0);
    std::deque<std::size_t> queue{x};
    seen[x] = 1;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      out.push_back(Literal{names_[cur], a.negated});
      for (const Arc &arc : adjacency[cur]) {
        if (arc.label != *label || seen[arc.to]) continue;
        seen[arc.to] = 1;
        queue.push_back(arc.to);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Preorder::uppers_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const Arc &arc : up_[i]) out.push_back(arc.to);
  if (top_ && *top_ != i) out.push_back(*top_);
  std::sort(out.begin(), out.end(),
            [this](std::size_t l, std::size_t r) { return names_[l] < names_[r]; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> Preorder::direct_uppers(std::string_view id) const {
  std::vector<std::string> out;
  for (std::size_t j : uppers_of(index_of(id))) out.push_back(names_[j]);
  return out;
}

std::vector<std::string> Preorder::direct_lowers(std::string_view id) const {
  std::size_t i = index_of(id);
  std::vector<std::string> out;
  for (const Arc &arc : down_[i]) out.push_back(names_[arc.to]);
  if (top_ && *top_ == i) {
    for (std::size_t j = 0; j < names_.size(); ++j) {
      if (j != i) out.push_back(names_[j]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> Preorder::shortest_path(std::size_t from, std::size_t to) const {
  if (!reach_[from][to]) return {};
  std::vector<std::size_t> parent(names_.size(), names_.size());
  std::vector<char> seen(names_.size(), 0);
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (std::size_t next : uppers_of(cur)) {
      if (seen[next]) continue;
      seen[next] = 1;
      parent[next] = cur;
      queue.push_back(next);
    }
  }
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::string> Preorder::upward_path(std::string_view lower,
                                               std::string_view upper) const {
  std::vector<std::string> out;
  for (std::size_t i : shortest_path(index_of(lower), index_of(upper))) out.push_back(names_[i]);
  return out;
}

std::optional<std::size_t> Preorder::distance(std::string_view lower,
                                              std::string_view upper) const {
  auto path = shortest_path(index_of(lower), index_of(upper));
  if (path.empty()) return std::nullopt;
  return path.size() - 1;
}

std::optional<Relation> Preorder::edge_label(std::string_view lower,
                                             std::string_view upper) const {
  std::size_t a = index_of(lower);
  std::size_t b = index_of(upper);
  for (const Arc &arc : up_[a]) {
    if (arc.to == b) return arc.label;
  }
  return std::nullopt;
}

std::optional<std::size_t> Preorder::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Preorder::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) {
    throw Error(ErrorCode::unknown_atom,
                "unknown " + std::string(to_string(kind_)) + " '" + std::string(id) + "'");
  }
  return *i;
}

} // namespace vpl
