#include "rigid/rootdata.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rigid {

std::string subset_name(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

int RootSystem::find(const IntVec& root) const {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == root) return static_cast<int>(i);
  }
  return -1;
}

int RootSystem::find_coroot(const IntVec& coroot) const {
  for (std::size_t i = 0; i < coroots.size(); ++i) {
    if (coroots[i] == coroot) return static_cast<int>(i);
  }
  return -1;
}

std::size_t RootSystem::num_positive() const {
  return static_cast<std::size_t>(std::count(positive.begin(), positive.end(), true));
}

int RootSystem::component_of(int i) const {
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (std::find(components[c].begin(), components[c].end(), i) != components[c].end()) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

namespace {

IntVec reflect(const IntVec& x, const IntVec& alpha, const IntVec& coroot) {
  return sub(x, scale(dot(x, coroot), alpha));
}

RatVec coordinates(const std::vector<IntVec>& basis, std::size_t m, const IntVec& v) {
  auto sol = solve_rational(columns_matrix(basis, m), basis.size(), v);
  if (!sol) fail(ErrorKind::NotCartan, "root " + to_string(v) + " is not in the span of the simple roots");
  return *sol;
}

}  // namespace

RootSystem generate_root_system(const BasedRootDatum& d, std::size_t root_bound) {
  const std::size_t k = d.rank();
  if (d.simple_coroots.size() != k) {
    fail(ErrorKind::InvalidArgument, "simple_roots and simple_coroots differ in length");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (d.simple_roots[i].size() != d.m || d.simple_coroots[i].size() != d.m) {
      fail(ErrorKind::InvalidArgument, "simple root " + std::to_string(i + 1) + " has wrong dimension");
    }
  }
  RootSystem rs;
  rs.cartan.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rs.cartan[i][j] = static_cast<int>(dot(d.simple_roots[j], d.simple_coroots[i]));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (rs.cartan[i][i] != 2) {
      fail(ErrorKind::NotCartan, "<alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(i + 1) +
                                     "^vee> = " + std::to_string(rs.cartan[i][i]) + ", expected 2");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (rs.cartan[i][j] > 0 || ((rs.cartan[i][j] == 0) != (rs.cartan[j][i] == 0))) {
        fail(ErrorKind::NotCartan, "Cartan entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                       ") violate sign/zero conditions");
      }
    }
  }
  if (rank_int(columns_matrix(d.simple_roots, d.m)) != k ||
      rank_int(columns_matrix(d.simple_coroots, d.m)) != k) {
    fail(ErrorKind::NotCartan, "simple roots or coroots are linearly dependent");
  }

  std::vector<std::pair<IntVec, IntVec>> queue;
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < k; ++i) {
    if (seen.insert(d.simple_roots[i]).second) queue.emplace_back(d.simple_roots[i], d.simple_coroots[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [root, coroot] = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      IntVec r = reflect(root, d.simple_roots[i], d.simple_coroots[i]);
      IntVec c = reflect(coroot, d.simple_coroots[i], d.simple_roots[i]);
      if (seen.insert(r).second) {
        queue.emplace_back(r, c);
        if (queue.size() > root_bound) {
          fail(ErrorKind::InfiniteWeylGroup, "root closure exceeded " + std::to_string(root_bound) + " roots");
        }
      }
    }
  }
  for (auto& [r, c] : queue) {
    rs.roots.push_back(r);
    rs.coroots.push_back(c);
  }
  for (const auto& r : rs.roots) {
    if (seen.count(scale(2, r))) fail(ErrorKind::NotReduced, "2*" + to_string(r) + " is a root");
  }
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    RatVec c = coordinates(d.simple_roots, d.m, rs.roots[i]);
    bool pos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
    bool negv = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x <= 0; });
    if (!pos && !negv) {
      fail(ErrorKind::NotCartan, "root " + to_string(rs.roots[i]) + " is neither positive nor negative");
    }
    rs.positive.push_back(pos);
    rs.root_coords.push_back(std::move(c));
    rs.coroot_coords.push_back(coordinates(d.simple_coroots, d.m, rs.coroots[i]));
  }
  for (std::size_t i = 0; i < k; ++i) rs.simple_index.push_back(rs.find(d.simple_roots[i]));

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root_of = [&](int x) { return parent[x] == x ? x : parent[x] = root_of(parent[x]); };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rs.cartan[i][j] != 0) parent[root_of(static_cast<int>(i))] = root_of(static_cast<int>(j));
    }
  }
  std::map<int, std::vector<int>> comps;
  for (std::size_t i = 0; i < k; ++i) comps[root_of(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [r, c] : comps) rs.components.push_back(c);
  std::sort(rs.components.begin(), rs.components.end());
  return rs;
}

std::vector<std::string> preset_names() { return {"sl2", "pgl2", "c2-aff", "c2-ext"}; }

BasedRootDatum preset(std::string_view name) {
  BasedRootDatum d;
  d.name = std::string(name);
  if (name == "sl2") {
    d.m = 1;
    d.simple_roots = {{1}};
    d.simple_coroots = {{2}};
  } else if (name == "pgl2") {
    d.m = 1;
    d.simple_roots = {{2}};
    d.simple_coroots = {{1}};
  } else if (name == "c2-aff") {
    d.m = 2;
    d.simple_roots = {{1, -1}, {0, 1}};
    d.simple_coroots = {{1, -1}, {0, 2}};
  } else if (name == "c2-ext") {
    d.m = 2;
    d.simple_roots = {{1, -1}, {0, 2}};
    d.simple_coroots = {{1, -1}, {0, 1}};
  } else {
    fail(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) + "'");
  }
  return d;
}

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<IntVec> int_matrix_field(const nlohmann::json& j, const std::string& field, std::size_t m) {
  if (!j.contains(field)) fail(ErrorKind::Parse, "missing field '" + field + "'");
  const auto& arr = j.at(field);
  if (!arr.is_array()) fail(ErrorKind::Parse, "field '" + field + "': expected an array of integer vectors");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& row = arr[i];
    std::string where = "field '" + field + "'[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(ErrorKind::Parse, where + ": expected an array");
    if (row.size() != m) {
      fail(ErrorKind::Parse, where + ": expected " + std::to_string(m) + " entries, got " + std::to_string(row.size()));
    }
    IntVec v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer()) {
        fail(ErrorKind::Parse, where + "[" + std::to_string(c) + "]: expected an integer");
      }
      v.push_back(row[c].get<std::int64_t>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

BasedRootDatum parse_datum_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, "malformed JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::Parse, "top level must be an object");
  BasedRootDatum d;
  if (!j.contains("name") || !j["name"].is_string()) fail(ErrorKind::Parse, "field 'name': expected a string");
  d.name = j["name"].get<std::string>();
  if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_integer() || j["lattice_rank"].get<long>() < 0) {
    fail(ErrorKind::Parse, "field 'lattice_rank': expected a nonnegative integer");
  }
  d.m = j["lattice_rank"].get<std::size_t>();
  d.simple_roots = int_matrix_field(j, "simple_roots", d.m);
  d.simple_coroots = int_matrix_field(j, "simple_coroots", d.m);
  if (d.simple_roots.size() != d.simple_coroots.size()) {
    fail(ErrorKind::Parse, "fields 'simple_roots' and 'simple_coroots' differ in length");
  }
  if (d.simple_roots.size() > 31) fail(ErrorKind::Parse, "field 'simple_roots': at most 31 simple roots");
  if (j.contains("param_orbit_names")) {
    const auto& names = j["param_orbit_names"];
    if (!names.is_array()) fail(ErrorKind::Parse, "field 'param_orbit_names': expected an array of strings");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string()) {
        fail(ErrorKind::Parse, "field 'param_orbit_names'[" + std::to_string(i) + "]: expected a string");
      }
      d.param_orbit_names.push_back(names[i].get<std::string>());
    }
  }
  for (const auto& [key, value] : j.items()) {
    static const std::set<std::string> known = {"name", "lattice_rank", "simple_roots", "simple_coroots",
                                                "param_orbit_names"};
    if (!known.count(key)) fail(ErrorKind::Parse, "unknown field '" + key + "'");
  }
  return d;
}

BasedRootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open datum file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_datum_json(ss.str());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) fail(ErrorKind::Parse, path + ": " + std::string(e.what()).substr(7));
    throw;
  }
}

QuotientDatum semisimple_quotient(const BasedRootDatum& d, Subset J) {
  QuotientDatum q;
  q.datum.name = d.name + "_J" + subset_name(J);
  std::vector<IntVec> coroots;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (contains(J, i)) {
      q.ambient_index.push_back(static_cast<int>(i));
      coroots.push_back(d.simple_coroots[i]);
    }
  }
  const std::size_t nj = coroots.size();
  // C: nj x m, rows are the coroots; its column lattice is the image L.
  IntMat C(coroots.begin(), coroots.end());
  SmithForm f = smith_normal_form(C, nj, d.m);
  const std::size_t r = f.rank;
  // L = U^{-1} D Z^m, so a basis of L is d_i * (column i of U^{-1}).
  IntMat basis(nj, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(nj, 0);
    e[i] = 1;
    auto col = solve_integer(f.U, nj, e);
    for (std::size_t row = 0; row < nj; ++row) basis[row][i] = (*col)[row] * f.diag[i];
  }
  auto coords_of = [&](const IntVec& x) {
    auto c = solve_integer(basis, r, rigid::apply(C, x));
    if (!c) fail(ErrorKind::InvalidArgument, "quotient coordinates failed");
    return *c;
  };
  q.to_quotient.assign(r, IntVec(d.m, 0));
  for (std::size_t i = 0; i < d.m; ++i) {
    IntVec e(d.m, 0);
    e[i] = 1;
    IntVec c = coords_of(e);
    for (std::size_t row = 0; row < r; ++row) q.to_quotient[row][i] = c[row];
  }
  q.datum.m = r;
  for (std::size_t j = 0; j < nj; ++j) {
    q.datum.simple_roots.push_back(rigid::apply(q.to_quotient, d.simple_roots[q.ambient_index[j]]));
    q.datum.simple_coroots.push_back(basis[j]);
  }
  return q;
}

IntMat cotwist_coordinates(const BasedRootDatum& d, Subset J) {
  std::vector<IntVec> roots;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (contains(J, i)) roots.push_back(d.simple_roots[i]);
  }
  IntMat A = columns_matrix(roots, d.m);
  SmithForm f = smith_normal_form(A, d.m, roots.size());
  return IntMat(f.U.begin() + static_cast<std::ptrdiff_t>(f.rank), f.U.end());
}

}  // namespace rigid
