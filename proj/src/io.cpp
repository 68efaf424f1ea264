#include "mgw/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mgw/error.hpp"

namespace mgw {

namespace {

template <class T>
T field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("descriptor is missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("descriptor field \"") + key + "\": " + e.what());
  }
}

FieldMatrix matrix_from_json(std::uint32_t p, const json& rows) {
  if (!rows.is_array()) throw InputError("\"matrix\" must be an array of rows");
  PrimeField field(p);
  std::vector<std::vector<Residue>> data;
  for (const auto& row : rows) {
    std::vector<Residue> r;
    for (const auto& x : row) {
      const long long v = x.get<long long>();
      if (v < 0 || v >= static_cast<long long>(p)) {
        throw InputError("matrix entry " + std::to_string(v) + " is not a residue mod " +
                         std::to_string(p));
      }
      r.push_back(static_cast<Residue>(v));
    }
    data.push_back(std::move(r));
  }
  return FieldMatrix(field, data);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Matroid matroid_from_json(const json& d) {
  if (!d.is_object()) throw InputError("matroid descriptor must be a JSON object");
  const auto type = field_of<std::string>(d, "type");
  if (type == "circuits") {
    const int n = field_of<int>(d, "n");
    std::vector<SubsetMask> circuits;
    for (const auto& c : field_of<std::vector<std::vector<int>>>(d, "circuits")) {
      if (!std::is_sorted(c.begin(), c.end())) {
        throw InputError("circuits must be listed as ascending label arrays");
      }
      circuits.push_back(SubsetMask::from_labels(c, n));
    }
    return Matroid::from_circuits(n, std::move(circuits));
  }
  if (type == "uniform") return Matroid::uniform(field_of<int>(d, "r"), field_of<int>(d, "n"));
  if (type == "linear") {
    const auto p = field_of<long long>(d, "p");
    if (p < 2 || p >= (1 << 16)) throw InputError("bad modulus " + std::to_string(p));
    const FieldMatrix m = matrix_from_json(static_cast<std::uint32_t>(p), d.at("matrix"));
    const auto role = field_of<std::string>(d, "role");
    if (role == "parity_check") return Matroid::from_parity_check(m);
    if (role == "generator") return Matroid::from_generator(m);
    throw InputError("role must be \"parity_check\" or \"generator\", got \"" + role + "\"");
  }
  if (type == "dual") return matroid_from_json(field_of<json>(d, "of")).dual();
  throw InputError("unknown matroid type \"" + type + "\"");
}

LinearCode read_code(std::istream& in) {
  std::string role;
  if (!(in >> role)) throw InputError("code file is empty");
  const FieldMatrix m = read_matrix(in);
  std::string trailing;
  if (in >> trailing) throw InputError("unexpected trailing data in code file: " + trailing);
  if (role == "generator") return LinearCode::from_generator(m);
  if (role == "parity_check") return LinearCode::from_parity_check(m);
  throw InputError("code role must be \"generator\" or \"parity_check\", got \"" + role + "\"");
}

void write_code(std::ostream& out, const LinearCode& code) {
  out << "generator\n";
  write_matrix(out, code.generator());
}

LoadedInput parse_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json d;
    try {
      d = json::parse(text);
    } catch (const json::exception& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    Matroid m = matroid_from_json(d);
    std::optional<LinearCode> code;
    if (d.value("type", "") == "linear") {
      const FieldMatrix mat =
          matrix_from_json(static_cast<std::uint32_t>(d.at("p").get<long long>()), d.at("matrix"));
      code = d.at("role") == "generator" ? LinearCode::from_generator(mat)
                                         : LinearCode::from_parity_check(mat);
    }
    return {std::move(m), std::move(code)};
  }
  std::istringstream in(text);
  LinearCode code = read_code(in);
  return {code_matroid(code), code};
}

LoadedInput load_input(const std::string& path) { return parse_input(read_file(path)); }

json subset_json(SubsetMask s) { return s.labels(); }

json chain_json(const Chain& chain) {
  json out = json::array();
  for (SubsetMask s : chain) out.push_back(subset_json(s));
  return out;
}

json to_json(const WeightReport& r) {
  json cez = json::array();
  for (std::size_t i = 0; i < r.cez_witnesses.size(); ++i) {
    cez.push_back({{"level", i + 1},
                   {"tau", subset_json(r.cez_witnesses[i].tau)},
                   {"mu", subset_json(r.cez_witnesses[i].mu)}});
  }
  return {{"t", r.t},
          {"d", r.d},
          {"e", r.e},
          {"e_tilde", r.e_tilde},
          {"g", r.g},
          {"chained", r.chained},
          {"witnesses",
           {{"hamming", chain_json(r.hamming_witnesses)},
            {"bottom_up", chain_json(r.bottom_up_chain)},
            {"top_down", chain_json(r.top_down_chain)},
            {"cez", cez}}}};
}

json to_json(const WeiReport& r) {
  return {{"identity_holds", r.identity_holds},
          {"left", r.left},
          {"right_transformed", r.right_transformed},
          {"union", r.union_values}};
}

json to_json(const BettiDiagram& d) {
  json support = json::array();
  for (const auto& [i, x] : d.support) support.push_back({i, subset_json(x)});
  json table = json::object();
  if (d.values) {
    for (const auto& [key, v] : d.graded_table()) {
      table[std::to_string(key.first)][std::to_string(key.second)] = v;
    }
  } else {
    for (const auto& [i, j] : d.graded_support()) {
      table[std::to_string(i)][std::to_string(j)] = true;
    }
  }
  json out = {{"support", support}, {"table", table}};
  if (d.values) {
    json values = json::object();
    for (const auto& [key, v] : *d.values) {
      std::string label;
      for (int x : key.second.labels()) label += (label.empty() ? "" : ",") + std::to_string(x);
      values[std::to_string(key.first)][label] = v;
    }
    out["values"] = values;
  }
  return out;
}

json to_json(const AxiomReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"axiom", v.axiom}, {"x", subset_json(v.x)}, {"y", subset_json(v.y)}});
  }
  return {{"n", r.n},
          {"exhaustive", r.exhaustive},
          {"checked_pairs", r.checked_pairs},
          {"ok", r.ok()},
          {"violations", violations}};
}

json to_json(const ResolutionShape& s) {
  json out = {{"pure", s.pure}, {"linear", s.linear}};
  out["degrees"] = s.degrees ? json(*s.degrees) : json(nullptr);
  return out;
}

json ladder_json(const CycleLadder& ladder) {
  json levels = json::array();
  for (const auto& level : ladder.levels()) {
    json lv = json::array();
    for (SubsetMask s : level) lv.push_back(subset_json(s));
    levels.push_back(lv);
  }
  return {{"levels", levels}};
}

namespace {

std::string join(const WeightVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join_chain(const Chain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " < " : "") + c[i].to_string();
  return s;
}

}  // namespace

std::string weights_table(const WeightReport& r) {
  std::ostringstream out;
  out << "t        " << r.t << '\n'
      << "d        " << join(r.d) << '\n'
      << "e        " << join(r.e) << '\n'
      << "e_tilde  " << join(r.e_tilde) << '\n'
      << "g        " << join(r.g) << '\n'
      << "chained  " << (r.chained ? "yes" : "no") << '\n'
      << "bottom-up chain  " << join_chain(r.bottom_up_chain) << '\n'
      << "top-down chain   " << join_chain(r.top_down_chain) << '\n';
  return out.str();
}

std::string wei_table(const WeiReport& r, const char* name) {
  std::ostringstream out;
  out << name << ": " << (r.identity_holds ? "holds" : "FAILS") << "  left {" << join(r.left)
      << "}  n+1-dual {" << join(r.right_transformed) << "}\n";
  return out.str();
}

std::string betti_table(const BettiDiagram& d) {
  const auto graded = d.graded_support();
  std::map<std::pair<int, int>, std::uint64_t> values;
  if (d.values) values = d.graded_table();
  std::ostringstream out;
  out << "i\\j";
  for (int j = 0; j <= d.n; ++j) out << std::setw(5) << j;
  out << '\n';
  for (int i = 0; i <= d.t; ++i) {
    out << std::setw(3) << i;
    for (int j = 0; j <= d.n; ++j) {
      std::string cell = ".";
      if (graded.count({i, j})) cell = d.values ? std::to_string(values[{i, j}]) : "*";
      out << std::setw(5) << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mgw
