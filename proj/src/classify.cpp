#include <algorithm>
#include <functional>

#include "shortroots/errors.hpp"
#include "shortroots/root_system.hpp"

namespace shortroots {

namespace {

void checkCartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ValidationError("Cartan matrix is not square");
    if (a[i][i] != 2) throw ValidationError("Cartan matrix diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw ValidationError("Cartan matrix off-diagonal entries must be non-positive");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw ValidationError("Cartan matrix zero pattern is not symmetric");
    }
  }
}

[[noreturn]] void notFinite(const std::string& why) {
  throw ValidationError("not a Cartan matrix of finite type: " + why);
}

// Walks a path component starting from an endpoint.
std::vector<int> chainOrder(const std::vector<int>& nodes, const std::vector<std::vector<int>>& adj) {
  int start = nodes.front();
  for (int v : nodes)
    if (adj[v].size() <= 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (order.size() < nodes.size()) {
    const int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

RootSystemSpec classifyConnected(const IntMatrix& a, const std::vector<int>& nodes,
                                 const std::vector<std::vector<int>>& adj) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {Family::A, 1};

  int edges = 0, doubles = 0, triples = 0;
  for (int v : nodes)
    for (int w : adj[v]) {
      if (w < v) continue;
      ++edges;
      const int mult = a[v][w] * a[w][v];
      if (mult == 2) ++doubles;
      else if (mult == 3) ++triples;
      else if (mult != 1) notFinite("bond of multiplicity " + std::to_string(mult));
    }
  if (edges != k - 1) notFinite("Dynkin diagram contains a cycle");

  if (triples > 0) {
    if (k != 2) notFinite("triple bond in a diagram with more than two nodes");
    return {Family::G, 2};
  }

  std::size_t maxDegree = 0;
  for (int v : nodes) maxDegree = std::max(maxDegree, adj[v].size());

  if (doubles > 1) notFinite("more than one double bond");
  if (doubles == 1) {
    if (maxDegree > 2) notFinite("branched diagram with a double bond");
    if (k == 2) return {Family::B, 2};
    const auto order = chainOrder(nodes, adj);
    int pos = -1;
    for (int i = 0; i + 1 < k; ++i)
      if (a[order[i]][order[i + 1]] * a[order[i + 1]][order[i]] == 2) pos = i;
    if (pos == 0 || pos == k - 2) {
      // Orient so the double bond sits at the end (end, inner).
      const int end = (pos == k - 2) ? order[k - 1] : order[0];
      const int inner = (pos == k - 2) ? order[k - 2] : order[1];
      // |a[end][inner]| == 2 exactly when alpha_end is the shorter root.
      return {a[end][inner] == -2 ? Family::B : Family::C, k};
    }
    if (k == 4 && pos == 1) return {Family::F, 4};
    notFinite("double bond in the interior of a chain longer than four");
  }

  if (maxDegree <= 2) return {Family::A, k};
  int branch = -1;
  for (int v : nodes) {
    if (adj[v].size() > 3) notFinite("node of degree > 3");
    if (adj[v].size() == 3) {
      if (branch >= 0) notFinite("more than one branch node");
      branch = v;
    }
  }
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, k};
  notFinite("branched diagram of infinite type");
}

}  // namespace

std::vector<SubsystemComponent> classifyComponents(const IntMatrix& cartan) {
  checkCartan(cartan);
  const int n = static_cast<int>(cartan.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cartan[i][j] != 0) adj[i].push_back(j);

  std::vector<int> comp(n, -1);
  std::vector<SubsystemComponent> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < nodes.size(); ++q)
      for (int w : adj[nodes[q]])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          nodes.push_back(w);
        }
    std::sort(nodes.begin(), nodes.end());
    out.push_back({classifyConnected(cartan, nodes, adj), nodes});
  }
  return out;
}

std::vector<RootSystemSpec> classifySubsystem(const IntMatrix& cartan) {
  std::vector<RootSystemSpec> types;
  for (auto& c : classifyComponents(cartan)) types.push_back(c.type);
  return types;
}

}  // namespace shortroots
