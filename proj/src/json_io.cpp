#include "resgrass/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "resgrass/grassmann.hpp"

namespace resgrass {

namespace {

using nlohmann::json;

Matrix parse_matrix(const json& re, const json& im, int rows, int cols, const char* what) {
  if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != rows ||
      static_cast<int>(im.size()) != rows)
    throw ShapeMismatch(std::string(what) + ": wrong row count");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& rrow = re[i];
    const json& irow = im[i];
    if (!rrow.is_array() || !irow.is_array() || static_cast<int>(rrow.size()) != cols ||
        static_cast<int>(irow.size()) != cols)
      throw ShapeMismatch(std::string(what) + ": wrong column count");
    for (int j = 0; j < cols; ++j) {
      if (!rrow[j].is_number() || !irow[j].is_number())
        throw ParseError(std::string(what) + ": non-numeric entry");
      m(i, j) = Complex(rrow[j].get<double>(), irow[j].get<double>());
    }
  }
  return m;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

BlockOperator block_operator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_plus") || !j.contains("n_minus") ||
      !j.contains("re") || !j.contains("im"))
    throw ParseError("BlockOperator: expected {n_plus, n_minus, re, im}");
  if (!j["n_plus"].is_number_integer() || !j["n_minus"].is_number_integer())
    throw ParseError("BlockOperator: dimensions must be integers");
  const int np = j["n_plus"].get<int>();
  const int nm = j["n_minus"].get<int>();
  if (np < 1 || nm < 1) throw ParseError("BlockOperator: dimensions must be >= 1");
  const SplitSpace space(np, nm);
  return BlockOperator(space,
                       parse_matrix(j["re"], j["im"], space.dim(), space.dim(), "BlockOperator"));
}

void write_matrix_part(std::ostream& os, const Matrix& m, bool imag) {
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_double(imag ? m(i, j).imag() : m(i, j).real());
    }
    os << ']';
  }
  os << ']';
}

void write_complex_matrix_fields(std::ostream& os, const Matrix& m) {
  os << "\"re\":";
  write_matrix_part(os, m, false);
  os << ",\"im\":";
  write_matrix_part(os, m, true);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

BlockOperator read_block_operator(const std::string& json_text) {
  return block_operator_from_json(parse_text(json_text));
}

BlockOperator read_block_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_block_operator(ss.str());
}

ExtendedElement read_extended_element(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("mu") || !j.contains("gamma") || !j["gamma"].is_number())
    throw ParseError("ExtendedElement: expected {mu, gamma}");
  return ExtendedElement(PredualElement(block_operator_from_json(j["mu"])),
                         j["gamma"].get<double>());
}

GrassmannPoint read_grassmann_point(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (j.is_object() && j.contains("projector"))
    return GrassmannPoint(block_operator_from_json(j["projector"]));
  // basis form: {n_plus, n_minus, columns: {re, im}}
  if (j.is_object() && j.contains("columns") && j.contains("n_plus") && j.contains("n_minus")) {
    if (!j["n_plus"].is_number_integer() || !j["n_minus"].is_number_integer())
      throw ParseError("GrassmannPoint: dimensions must be integers");
    const SplitSpace space(j["n_plus"].get<int>(), j["n_minus"].get<int>());
    const json& cols = j["columns"];
    if (!cols.is_object() || !cols.contains("re") || !cols.contains("im") ||
        !cols["re"].is_array() || cols["re"].empty() || !cols["re"][0].is_array())
      throw ParseError("GrassmannPoint: columns must carry re and im arrays");
    const int k = static_cast<int>(cols["re"][0].size());
    if (k < 1) throw ShapeMismatch("GrassmannPoint: empty basis");
    const Matrix columns = parse_matrix(cols["re"], cols["im"], space.dim(), k, "columns");
    return grassmann_from_basis(columns, space);
  }
  throw ParseError("GrassmannPoint: expected {projector} or {n_plus, n_minus, columns}");
}

void write_block_operator(std::ostream& os, const BlockOperator& op) {
  os << "{\"n_plus\":" << op.space().n_plus << ",\"n_minus\":" << op.space().n_minus << ',';
  write_complex_matrix_fields(os, op.entries());
  os << '}';
}

void write_extended_element(std::ostream& os, const ExtendedElement& x) {
  os << "{\"mu\":";
  write_block_operator(os, x.mu.op());
  os << ",\"gamma\":" << format_double(x.gamma) << '}';
}

void write_grassmann_point(std::ostream& os, const GrassmannPoint& w) {
  os << "{\"projector\":";
  write_block_operator(os, w.projector());
  os << '}';
}

void write_riccati_report(std::ostream& os, const RiccatiReport& r) {
  os << "{\"k\":{";
  write_complex_matrix_fields(os, r.k);
  os << "},\"residual\":" << format_double(r.residual) << ",\"iterations\":" << r.iterations
     << ",\"gap\":" << format_double(r.gap) << '}';
}

void write_unbounded_report(std::ostream& os, const UnboundedReport& r) {
  os << "{\"n\":" << r.n << ",\"res_norm\":" << format_double(r.res_norm)
     << ",\"lower_bound\":" << format_double(r.lower_bound) << '}';
}

void write_cartan_report(std::ostream& os, const CartanReport& r) {
  os << "{\"N\":" << r.N << ",\"j_s2\":" << format_double(r.j_s2)
     << ",\"j_s1\":" << format_double(r.j_s1) << ",\"diag_s1\":" << format_double(r.diag_s1)
     << ",\"offblock_s2\":" << format_double(r.offblock_s2)
     << ",\"bound_ok\":" << (r.bound_ok ? "true" : "false") << '}';
}

std::string to_json(const BlockOperator& op) {
  std::ostringstream os;
  write_block_operator(os, op);
  return os.str();
}

}  // namespace resgrass
