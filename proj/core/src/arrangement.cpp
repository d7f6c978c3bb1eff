#include "resgrass/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "resgrass/errors.hpp"

namespace resgrass {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& tok) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(tok, &used);
    if (used != tok.size()) throw InputError("bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("bad integer '" + tok + "'");
  }
}

void check_requested_prime(std::int64_t p, const PrimeField& field) {
  if (p <= 1 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("requested field modulus " + std::to_string(p) + " is not prime");
  if (static_cast<std::uint32_t>(p) != field.modulus())
    throw InputError("input requests F_" + std::to_string(p) + " but the session uses F_" +
                     std::to_string(field.modulus()));
}

Arrangement from_matrix(IntMatrix m, const PrimeField& field, std::string name) {
  if (m.empty() || m.front().empty()) throw InputError("empty realization matrix");
  const auto n = m.front().size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("ragged realization matrix");
  Arrangement a;
  a.name = std::move(name);
  a.n = static_cast<int>(n);
  a.rank2_flats = rank2_flats_from_realization(m, field);
  a.realization = std::move(m);
  return a;
}

Arrangement parse_json(std::string_view source, const PrimeField& field, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (j.contains("p")) check_requested_prime(j.at("p").get<std::int64_t>(), field);
    if (j.contains("name")) name = j.at("name").get<std::string>();
    std::optional<Arrangement> a;
    if (j.contains("matrix") && !j.at("matrix").is_null())
      a = from_matrix(j.at("matrix").get<IntMatrix>(), field, name);
    if (j.contains("flats")) {
      auto flats = j.at("flats").get<std::vector<IndexSet>>();
      for (auto& f : flats) std::sort(f.begin(), f.end());
      std::sort(flats.begin(), flats.end());
      if (a) {
        if (flats != a->rank2_flats) throw InputError("flats disagree with the realization");
      } else {
        if (!j.contains("n")) throw InputError("JSON arrangement needs \"n\" or \"matrix\"");
        a = Arrangement{name, j.at("n").get<int>(), std::nullopt, std::move(flats)};
      }
    }
    if (!a) throw InputError("JSON arrangement needs \"flats\" or \"matrix\"");
    if (j.contains("n") && j.at("n").get<int>() != a->n) throw InputError("\"n\" disagrees with matrix");
    return *a;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON arrangement: ") + e.what());
  }
}

}  // namespace

int Arrangement::rank(const PrimeField& field) const {
  if (realization) {
    IndexSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return static_cast<int>(column_rank(*realization, all, field));
  }
  if (n <= 2) return n;
  const bool one_pencil = rank2_flats.size() == 1 && static_cast<int>(rank2_flats[0].size()) == n;
  return one_pencil ? 2 : 3;
}

std::vector<IndexSet> Arrangement::dependent_triples() const {
  std::vector<IndexSet> out;
  for (const auto& flat : rank2_flats)
    for (const auto& t : subsets(static_cast<int>(flat.size()), 3))
      out.push_back({flat[t[0]], flat[t[1]], flat[t[2]]});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Matrix realization_matrix(const IntMatrix& m, const PrimeField& field) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  Matrix out(field, m.size(), cols);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = field.reduce(m[r][c]);
  return out;
}

std::size_t column_rank(const IntMatrix& m, const IndexSet& cols, const PrimeField& field) {
  // Rank of the selected columns = rank of their transposes as rows.
  Matrix t(field, cols.size(), m.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t r = 0; r < m.size(); ++r) t(i, r) = field.reduce(m[r][cols[i]]);
  return t.rank();
}

std::vector<IndexSet> rank2_flats_from_realization(const IntMatrix& m, const PrimeField& field) {
  const int n = m.empty() ? 0 : static_cast<int>(m.front().size());
  for (int i = 0; i < n; ++i)
    if (column_rank(m, {i}, field) == 0)
      throw InputError("hyperplane " + std::to_string(i) + " has a zero normal vector");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (column_rank(m, {i, j}, field) < 2)
        throw InputError("hyperplanes " + std::to_string(i) + " and " + std::to_string(j) +
                         " coincide (proportional normals)");

  std::set<IndexSet> flats;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IndexSet flat{i, j};
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && column_rank(m, {i, j, k}, field) == 2) flat.push_back(k);
      if (flat.size() >= 3) {
        std::sort(flat.begin(), flat.end());
        flats.insert(std::move(flat));
      }
    }
  return {flats.begin(), flats.end()};
}

void validate(const Arrangement& a, const PrimeField& field) {
  if (a.n < 1 || a.n > 63) throw InputError("arrangement size must lie in [1, 63]");
  for (const auto& f : a.rank2_flats) {
    if (f.size() < 3) throw InputError("flat of size " + std::to_string(f.size()) + " (need ≥ 3)");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= a.n)
        throw InputError("flat index " + std::to_string(f[i]) + " out of range");
      if (i > 0 && f[i - 1] >= f[i]) throw InputError("flat indices must be distinct and sorted");
    }
  }
  for (std::size_t i = 0; i < a.rank2_flats.size(); ++i)
    for (std::size_t j = i + 1; j < a.rank2_flats.size(); ++j) {
      IndexSet common;
      std::set_intersection(a.rank2_flats[i].begin(), a.rank2_flats[i].end(),
                            a.rank2_flats[j].begin(), a.rank2_flats[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) throw InputError("two flats share more than one hyperplane");
    }
  if (a.realization) {
    if (a.realization->empty() || static_cast<int>(a.realization->front().size()) != a.n)
      throw InputError("realization width differs from n");
    for (const auto& f : a.rank2_flats)
      if (column_rank(*a.realization, f, field) != 2)
        throw InputError("flat normals do not have rank 2");
  }
}

Arrangement load_arrangement(std::string_view source, const PrimeField& field, std::string name) {
  const std::string body = trim(source);
  if (body.empty()) throw InputError("empty arrangement input");

  Arrangement a;
  if (body.front() == '{') {
    a = parse_json(body, field, std::move(name));
  } else {
    std::istringstream in(body);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw InputError("empty arrangement input");

    std::istringstream header(lines.front());
    std::string kind;
    header >> kind;
    std::map<std::string, std::int64_t> opts;
    for (std::string tok; header >> tok;) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw InputError("bad header token '" + tok + "'");
      opts[tok.substr(0, eq)] = parse_int(tok.substr(eq + 1));
    }
    if (opts.contains("p")) check_requested_prime(opts["p"], field);

    if (kind == "matrix") {
      IntMatrix m;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        std::vector<std::int64_t> r;
        for (std::string tok; row >> tok;) r.push_back(parse_int(tok));
        m.push_back(std::move(r));
      }
      a = from_matrix(std::move(m), field, std::move(name));
    } else if (kind == "flats") {
      if (!opts.contains("n")) throw InputError("flats header needs n=<count>");
      a.name = std::move(name);
      a.n = static_cast<int>(opts["n"]);
      for (std::size_t i = 1; i < lines.size(); ++i) {
        IndexSet flat;
        std::istringstream row(lines[i]);
        for (std::string tok; std::getline(row, tok, ',');) {
          tok = trim(tok);
          if (tok.empty()) throw InputError("empty index in flat '" + lines[i] + "'");
          flat.push_back(static_cast<int>(parse_int(tok)));
        }
        std::sort(flat.begin(), flat.end());
        a.rank2_flats.push_back(std::move(flat));
      }
      std::sort(a.rank2_flats.begin(), a.rank2_flats.end());
    } else {
      throw InputError("unknown arrangement header '" + kind + "' (expected matrix or flats)");
    }
  }
  validate(a, field);
  return a;
}

Arrangement load_arrangement_file(const std::string& path, const PrimeField& field) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) stem.erase(0, slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) stem.resize(dot);
  return load_arrangement(buf.str(), field, stem);
}

std::vector<IndexSet> dependent_sets(const Arrangement& a, int max_size, const PrimeField& field) {
  if (!a.realization) {
    if (max_size > 3)
      throw InputError("dependent sets of size > 3 need a realization (arrangement '" + a.name + "')");
    return max_size < 3 ? std::vector<IndexSet>{} : a.dependent_triples();
  }
  std::vector<IndexSet> out;
  for (int k = 3; k <= std::min(max_size, a.n); ++k)
    for (auto& s : subsets(a.n, k))
      if (column_rank(*a.realization, s, field) < s.size()) out.push_back(std::move(s));
  return out;
}

std::vector<std::string> fixture_names() { return {"A3", "Hessian"}; }

Arrangement fixture(std::string_view name) {
  if (name == "A3") {
    // Normals of x_a-x_b, x_b-x_c, x_c-x_a, x_a, x_b, x_c.
    IntMatrix m{{1, 0, -1, 1, 0, 0}, {-1, 1, 0, 0, 1, 0}, {0, -1, 1, 0, 0, 1}};
    return Arrangement{"A3", 6, std::move(m), {{0, 1, 2}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}}};
  }
  if (name == "Hessian") {
    // Hyperplanes are the lines a*x + b*y = c of AG(2,3), indexed 3*dir + c with
    // dir ranging over (a,b) = (0,1), (1,0), (1,1), (1,2). Each point gives a flat.
    constexpr int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    Arrangement a{"Hessian", 12, std::nullopt, {}};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        IndexSet flat;
        for (int d = 0; d < 4; ++d) flat.push_back(3 * d + (dirs[d][0] * x + dirs[d][1] * y) % 3);
        a.rank2_flats.push_back(flat);
      }
    std::sort(a.rank2_flats.begin(), a.rank2_flats.end());
    return a;
  }
  throw InputError("unknown fixture '" + std::string(name) + "' (expected A3 or Hessian)");
}

}  // namespace resgrass
