#include "wincx/product.hpp"

#include <algorithm>
#include <sstream>

#include "wincx/errors.hpp"

namespace wincx {

long long MixedRadix::size() const {
  if (base <= 0 || width <= 0) throw BadParams("mixed radix: base and width must be positive");
  long long total = 1;
  for (int i = 0; i < width; ++i) {
    total *= base;
    if (total > kProductVertexCap)
      throw SizeOverflow("product vertex count exceeds cap");
  }
  return total;
}

int MixedRadix::encode(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != width) throw BadParams("mixed radix: wrong coordinate count");
  long long id = 0;
  for (int c : coords) {
    if (c < 0 || c >= base) throw BadParams("mixed radix: coordinate out of range");
    id = id * base + c;
  }
  return static_cast<int>(id);
}

std::vector<int> MixedRadix::decode(int id) const {
  std::vector<int> coords(static_cast<std::size_t>(width));
  for (int i = width - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = id % base;
    id /= base;
  }
  return coords;
}

std::string MixedRadix::label(int id) const {
  auto coords = decode(id);
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < width; ++i) {
    if (i) os << ',';
    os << coords[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

namespace {

void check_pair_cap(long long na, long long nb) {
  if (na * nb > kProductVertexCap) throw SizeOverflow("product vertex count exceeds cap");
}

}  // namespace

Digraph strong_product(const Digraph& g, const Digraph& h) {
  const long long na = g.vertex_count(), nb = h.vertex_count();
  check_pair_cap(na, nb);
  std::vector<std::pair<int, int>> arcs;
  auto emit = [&](int u1, int v1, int u2, int v2) {
    if (u1 == v1 && u2 == v2) return;
    arcs.emplace_back(static_cast<int>(u1 * nb + u2), static_cast<int>(v1 * nb + v2));
  };
  for (int u1 = 0; u1 < na; ++u1) {
    std::vector<int> heads = g.out(u1);
    heads.push_back(u1);
    for (int v1 : heads) {
      for (int u2 = 0; u2 < nb; ++u2) {
        for (int v2 : h.out(u2)) emit(u1, v1, u2, v2);
        emit(u1, v1, u2, u2);
      }
    }
  }
  return Digraph(static_cast<int>(na * nb), std::move(arcs));
}

Graph strong_product(const Graph& g, const Graph& h) {
  const long long na = g.vertex_count(), nb = h.vertex_count();
  check_pair_cap(na, nb);
  std::vector<std::pair<int, int>> edges;
  auto emit = [&](int u1, int v1, int u2, int v2) {
    if (u1 == v1 && u2 == v2) return;
    int a = static_cast<int>(u1 * nb + u2), b = static_cast<int>(v1 * nb + v2);
    if (a < b) edges.emplace_back(a, b);
  };
  for (int u1 = 0; u1 < na; ++u1) {
    std::vector<int> mates = g.neighbors(u1);
    mates.push_back(u1);
    for (int v1 : mates) {
      for (int u2 = 0; u2 < nb; ++u2) {
        for (int v2 : h.neighbors(u2)) emit(u1, v1, u2, v2);
        emit(u1, v1, u2, u2);
      }
    }
  }
  return Graph(static_cast<int>(na * nb), std::move(edges));
}

namespace {

template <class G>
G iterated_power(const G& g, int p) {
  if (p < 1) throw BadParams("strong power: p must be >= 1");
  MixedRadix codec{g.vertex_count(), p};
  codec.size();
  G acc = g;
  for (int i = 1; i < p; ++i) acc = strong_product(acc, g);
  return acc;
}

}  // namespace

Digraph strong_power(const Digraph& g, int p) { return iterated_power(g, p); }
Graph strong_power(const Graph& g, int p) { return iterated_power(g, p); }

namespace {

// one_way holds the directed base distance (the symmetric table for graphs,
// where both orientations coincide).
DistanceTable power_table_from_one_way(const DistanceTable& one_way, int p) {
  MixedRadix codec{one_way.size(), p};
  const long long total = codec.size();
  std::vector<Dist> values(static_cast<std::size_t>(total * total), 0);
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(total));
  for (long long id = 0; id < total; ++id)
    coords[static_cast<std::size_t>(id)] = codec.decode(static_cast<int>(id));
  for (long long u = 0; u < total; ++u) {
    const auto& cu = coords[static_cast<std::size_t>(u)];
    for (long long v = 0; v < total; ++v) {
      const auto& cv = coords[static_cast<std::size_t>(v)];
      Dist fwd = 0, bwd = 0;
      for (int i = 0; i < p; ++i) {
        int a = cu[static_cast<std::size_t>(i)], b = cv[static_cast<std::size_t>(i)];
        fwd = std::max(fwd, one_way.at(a, b));
        bwd = std::max(bwd, one_way.at(b, a));
      }
      values[static_cast<std::size_t>(u * total + v)] = std::min(fwd, bwd);
    }
  }
  return DistanceTable(static_cast<int>(total), std::move(values));
}

}  // namespace

DistanceTable power_distance_table(const Digraph& g, int p) {
  return power_table_from_one_way(directed_distance_table(g), p);
}

DistanceTable power_distance_table(const Graph& g, int p) {
  return power_table_from_one_way(distance_table(g), p);
}

}  // namespace wincx
