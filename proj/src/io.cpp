#include "homext/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace homext::io {

using exactlin::parse_rational;
using exactlin::Rational;
using exactlin::to_string;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

struct LineReader {
  std::vector<std::vector<std::string>> lines;
  std::size_t at = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto toks = tokenize(line);
      if (!toks.empty()) lines.push_back(std::move(toks));
    }
  }
  bool done() const { return at >= lines.size(); }
  const std::vector<std::string>& peek() const {
    if (done()) throw parse_error("unexpected end of file");
    return lines[at];
  }
  std::vector<std::string> next() {
    auto l = peek();
    ++at;
    return l;
  }
};

Vec parse_row(const std::vector<std::string>& toks, std::size_t expect,
              const std::string& what) {
  if (toks.size() != expect)
    throw parse_error(what + ": expected " + std::to_string(expect) + " entries, got " +
                      std::to_string(toks.size()));
  Vec v(expect);
  for (std::size_t i = 0; i < expect; ++i) {
    try {
      v[i] = parse_rational(toks[i]);
    } catch (const std::invalid_argument& e) {
      throw parse_error(what + ": " + e.what());
    }
  }
  return v;
}

std::vector<Vec> parse_rows(LineReader& r, std::size_t count, std::size_t width,
                            const std::string& what) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(parse_row(r.next(), width, what));
  return rows;
}

// file rows are images of basis vectors; internal matrices act on columns
Mat rows_to_column_action(const std::vector<Vec>& rows, std::size_t codim) {
  Mat m(codim, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != codim) throw parse_error("matrix block: ragged rows");
    for (std::size_t i = 0; i < codim; ++i) m.at(i, j) = rows[j][i];
  }
  return m;
}

std::vector<Vec> column_action_to_rows(const Mat& m) {
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < m.cols; ++j) rows.push_back(m.col(j));
  return rows;
}

std::string render_row(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += to_string(v[i]);
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t dim, const std::string& what) {
  std::size_t v;
  try {
    v = std::stoul(tok);
  } catch (...) {
    throw parse_error(what + ": bad index " + tok);
  }
  if (v < 1 || v > dim) throw parse_error(what + ": index " + tok + " out of range");
  return v - 1;
}

// counts that size allocations: reject junk, minus signs, and absurd values
std::size_t parse_count(const std::string& tok, std::size_t cap, const std::string& what) {
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(what + ": bad count " + tok);
  std::size_t v;
  try {
    v = std::stoul(tok);
  } catch (...) {
    throw parse_error(what + ": bad count " + tok);
  }
  if (v > cap) throw parse_error(what + ": count " + tok + " exceeds the supported size");
  return v;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  LineReader r(text);
  AlgebraFile f;

  auto kind_line = r.next();
  if (kind_line.size() != 2 || kind_line[0] != "kind")
    throw parse_error("expected 'kind hom-associative|hom-lie'");
  f.kind = kind_line[1];
  if (f.kind != "hom-associative" && f.kind != "hom-lie")
    throw parse_error("unknown kind: " + f.kind);

  auto dim_line = r.next();
  if (dim_line.size() != 2 || dim_line[0] != "dim") throw parse_error("expected 'dim N'");
  f.dim = parse_count(dim_line[1], 64, "dim");
  if (f.dim == 0) throw parse_error("dim must be positive");

  if (!r.done() && r.peek()[0] == "basis") {
    auto b = r.next();
    f.basis.assign(b.begin() + 1, b.end());
    if (f.basis.size() != f.dim) throw parse_error("basis: name count does not match dim");
  } else {
    f.basis = homalg::default_names(f.dim);
  }

  auto tw = r.next();
  if (tw.size() != 1 || tw[0] != "twist") throw parse_error("expected 'twist'");
  f.twist = rows_to_column_action(parse_rows(r, f.dim, f.dim, "twist"), f.dim);

  auto tb = r.next();
  if (tb.size() != 1 || tb[0] != "table") throw parse_error("expected 'table'");
  f.table = homalg::Tensor3(f.dim);
  std::vector<std::vector<bool>> given(f.dim, std::vector<bool>(f.dim, false));
  while (true) {
    auto line = r.next();
    if (line.size() == 1 && line[0] == "end") break;
    if (line.size() != 3 + f.dim)
      throw parse_error("table row: expected 'i j -> c1 .. cn'");
    if (line[2] != "->") throw parse_error("table row: expected '->'");
    std::size_t i = parse_index(line[0], f.dim, "table");
    std::size_t j = parse_index(line[1], f.dim, "table");
    std::vector<std::string> coeffs(line.begin() + 3, line.end());
    Vec v = parse_row(coeffs, f.dim, "table row");
    for (std::size_t k = 0; k < f.dim; ++k) f.table.at(i, j, k) = v[k];
    given[i][j] = true;
  }
  if (f.kind == "hom-lie") {
    // complete unspecified mirror entries by skew-symmetry; explicitly
    // given entries are kept verbatim so structural violations surface
    for (std::size_t i = 0; i < f.dim; ++i)
      for (std::size_t j = 0; j < f.dim; ++j)
        if (given[i][j] && !given[j][i] && i != j)
          for (std::size_t k = 0; k < f.dim; ++k) f.table.at(j, i, k) = -f.table.at(i, j, k);
  }

  while (!r.done()) {
    auto head = r.next();
    if (head[0] == "subspace") {
      if (head.size() != 3) throw parse_error("expected 'subspace NAME K'");
      std::size_t k = parse_count(head[2], f.dim, "subspace " + head[1]);
      f.subspaces.push_back({head[1], parse_rows(r, k, f.dim, "subspace " + head[1])});
    } else if (head[0] == "derivation") {
      if (head.size() != 3) throw parse_error("expected 'derivation NAME K'");
      std::size_t power = parse_count(head[2], 16, "derivation " + head[1]);
      Mat m = rows_to_column_action(parse_rows(r, f.dim, f.dim, "derivation " + head[1]), f.dim);
      f.derivations.push_back({head[1], power, std::move(m)});
    } else if (head[0] == "hnn") {
      if (head.size() != 2) throw parse_error("expected 'hnn NAME'");
      LetterBlock lb;
      lb.name = head[1];
      auto bb = r.next();
      if (bb.size() != 2 || bb[0] != "b-basis") throw parse_error("expected 'b-basis K'");
      std::size_t k = parse_count(bb[1], f.dim, "b-basis");
      lb.b_rows = parse_rows(r, k, f.dim, "b-basis");
      auto th = r.next();
      if (th.size() != 1 || th[0] != "theta") throw parse_error("expected 'theta'");
      lb.theta_rows = parse_rows(r, k, f.dim, "theta");
      auto dl = r.next();
      if (dl.size() != 1 || dl[0] != "delta") throw parse_error("expected 'delta'");
      lb.delta_rows = parse_rows(r, k, f.dim, "delta");
      auto xb = r.next();
      if (xb.size() != 2 || xb[0] != "x-basis") throw parse_error("expected 'x-basis M'");
      std::size_t m = parse_count(xb[1], f.dim, "x-basis");
      lb.x_rows = parse_rows(r, m, f.dim, "x-basis");
      f.letters.push_back(std::move(lb));
    } else {
      throw parse_error("unknown block: " + head[0]);
    }
  }
  return f;
}

std::string render_algebra_file(const AlgebraFile& f) {
  std::string out;
  out += "kind " + f.kind + "\n";
  out += "dim " + std::to_string(f.dim) + "\n";
  out += "basis";
  for (const auto& b : f.basis) out += " " + b;
  out += "\ntwist\n";
  for (const auto& row : column_action_to_rows(f.twist)) out += render_row(row) + "\n";
  out += "table\n";
  for (std::size_t i = 0; i < f.dim; ++i)
    for (std::size_t j = 0; j < f.dim; ++j) {
      Vec v(f.dim);
      bool nz = false;
      for (std::size_t k = 0; k < f.dim; ++k) {
        v[k] = f.table.at(i, j, k);
        if (v[k] != 0) nz = true;
      }
      if (nz)
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " -> " + render_row(v) + "\n";
    }
  out += "end\n";
  for (const auto& [name, rows] : f.subspaces) {
    out += "subspace " + name + " " + std::to_string(rows.size()) + "\n";
    for (const auto& row : rows) out += render_row(row) + "\n";
  }
  for (const auto& [name, power, m] : f.derivations) {
    out += "derivation " + name + " " + std::to_string(power) + "\n";
    for (const auto& row : column_action_to_rows(m)) out += render_row(row) + "\n";
  }
  for (const auto& lb : f.letters) {
    out += "hnn " + lb.name + "\n";
    out += "b-basis " + std::to_string(lb.b_rows.size()) + "\n";
    for (const auto& row : lb.b_rows) out += render_row(row) + "\n";
    out += "theta\n";
    for (const auto& row : lb.theta_rows) out += render_row(row) + "\n";
    out += "delta\n";
    for (const auto& row : lb.delta_rows) out += render_row(row) + "\n";
    out += "x-basis " + std::to_string(lb.x_rows.size()) + "\n";
    for (const auto& row : lb.x_rows) out += render_row(row) + "\n";
  }
  return out;
}

AlgebraFile from_hom_assoc(const homalg::HomAssociativeAlgebra& a) {
  AlgebraFile f;
  f.kind = "hom-associative";
  f.dim = a.dim();
  f.basis = a.basis_names;
  f.twist = a.module.alpha;
  f.table = a.table;
  return f;
}

AlgebraFile from_hom_lie(const homalg::HomLieAlgebra& l) {
  AlgebraFile f;
  f.kind = "hom-lie";
  f.dim = l.dim();
  f.basis = l.basis_names;
  f.twist = l.module.alpha;
  f.table = l.bracket;
  return f;
}

homalg::HomAssociativeAlgebra to_hom_assoc(const AlgebraFile& f) {
  if (f.kind != "hom-associative") throw parse_error("expected a hom-associative file");
  return homalg::HomAssociativeAlgebra(exactlin::HomModule(f.dim, f.twist), f.table, f.basis);
}

std::pair<exactlin::HomModule, homalg::Tensor3> to_hom_lie_raw(const AlgebraFile& f) {
  if (f.kind != "hom-lie") throw parse_error("expected a hom-lie file");
  return {exactlin::HomModule(f.dim, f.twist), f.table};
}

homalg::HomLieAlgebra to_hom_lie(const AlgebraFile& f) {
  auto [mod, tensor] = to_hom_lie_raw(f);
  return homalg::HomLieAlgebra(mod, tensor, f.basis);
}

const std::vector<Vec>* find_subspace(const AlgebraFile& f, const std::string& name) {
  for (const auto& [n, rows] : f.subspaces)
    if (n == name) return &rows;
  return nullptr;
}

hnn::HNNAssocData to_hnn_assoc_data(const AlgebraFile& f, homalg::ThetaVariant variant) {
  hnn::HNNAssocData data;
  data.A = to_hom_assoc(f);
  data.variant = variant;
  if (f.letters.empty()) throw parse_error("hnn-associative input needs at least one hnn block");
  for (const auto& lb : f.letters) {
    homalg::SubspaceData b(f.dim, lb.b_rows);
    Mat theta = rows_to_column_action(lb.theta_rows, f.dim);
    Mat delta = rows_to_column_action(lb.delta_rows, f.dim);
    // representatives are written in A coordinates; project onto A/B
    construct::CosetHomModule coset = construct::coset_module(data.A, b);
    std::vector<Vec> x;
    for (const auto& row : lb.x_rows) x.push_back(coset.project(row));
    data.letters.push_back({lb.name, std::move(b), std::move(theta), std::move(delta), x});
  }
  return data;
}

ActionFile parse_action_file(const std::string& text) {
  LineReader r(text);
  ActionFile f;
  auto head = r.next();
  if (head.size() != 1 || head[0] != "action") throw parse_error("expected 'action'");
  auto da = r.next();
  if (da.size() != 2 || da[0] != "dim-actor") throw parse_error("expected 'dim-actor N'");
  f.dim_actor = parse_count(da[1], 64, "dim-actor");
  auto dt = r.next();
  if (dt.size() != 2 || dt[0] != "dim-target") throw parse_error("expected 'dim-target N'");
  f.dim_target = parse_count(dt[1], 64, "dim-target");
  auto tb = r.next();
  if (tb.size() != 1 || tb[0] != "table") throw parse_error("expected 'table'");
  f.tensor.assign(f.dim_actor, Mat::zero(f.dim_target, f.dim_target));
  while (true) {
    auto line = r.next();
    if (line.size() == 1 && line[0] == "end") break;
    if (line.size() != 3 + f.dim_target) throw parse_error("action row: 'i j -> c1 .. cm'");
    if (line[2] != "->") throw parse_error("action row: expected '->'");
    std::size_t i = parse_index(line[0], f.dim_actor, "action");
    std::size_t j = parse_index(line[1], f.dim_target, "action");
    std::vector<std::string> coeffs(line.begin() + 3, line.end());
    Vec v = parse_row(coeffs, f.dim_target, "action row");
    for (std::size_t k = 0; k < f.dim_target; ++k) f.tensor[i].at(k, j) = v[k];
  }
  if (!r.done()) throw parse_error("trailing content after action table");
  return f;
}

std::string render_action_file(const ActionFile& f) {
  std::string out = "action\n";
  out += "dim-actor " + std::to_string(f.dim_actor) + "\n";
  out += "dim-target " + std::to_string(f.dim_target) + "\n";
  out += "table\n";
  for (std::size_t i = 0; i < f.dim_actor; ++i)
    for (std::size_t j = 0; j < f.dim_target; ++j) {
      Vec v = f.tensor[i].col(j);
      if (!exactlin::is_zero(v))
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " -> " + render_row(v) + "\n";
    }
  out += "end\n";
  return out;
}

void ReportFile::add_axioms(const AxiomReport& rep, const std::vector<std::string>& names) {
  for (const auto& axiom : rep.checked) {
    const Violation* v = rep.first_violation(axiom);
    add("axiom " + axiom, v ? "fail" : "pass");
    if (v) {
      std::string w = "(";
      for (std::size_t i = 0; i < v->witness.size(); ++i) {
        if (i) w += ",";
        std::size_t idx = v->witness[i];
        w += idx < names.size() ? names[idx] : std::to_string(idx + 1);
      }
      w += ")";
      add("witness " + axiom, w);
      std::string res = "[";
      for (std::size_t i = 0; i < v->residual.size(); ++i) {
        if (i) res += ", ";
        res += to_string(v->residual[i]);
      }
      res += "]";
      add("residual " + axiom, res);
    }
  }
}

std::string ReportFile::render_text() const {
  std::string out = "homext-report v1\n";
  out += "command " + command + "\n";
  for (const auto& d : inputs) out += "input " + d + "\n";
  for (const auto& [k, v] : fields) out += k + " " + v + "\n";
  out += "result " + result + "\n";
  return out;
}

std::string ReportFile::render_json() const {
  nlohmann::ordered_json j;
  j["report"] = "homext-report v1";
  j["command"] = command;
  j["inputs"] = inputs;
  nlohmann::ordered_json body = nlohmann::ordered_json::array();
  for (const auto& [k, v] : fields) {
    nlohmann::ordered_json item;
    item["key"] = k;
    item["value"] = v;
    body.push_back(item);
  }
  j["fields"] = body;
  j["result"] = result;
  return j.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace homext::io
