#include "slq/serialize.hpp"

#include "slq/textio.hpp"

namespace slq {

namespace {

template <class T, class Print>
Json entries_json(const Matrix<T>& m, Print&& print) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(print(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class Print>
Json matrix_document(const Matrix<T>& m, Print&& print) {
  Json out;
  out["kind"] = "matrix";
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = entries_json(m, print);
  return out;
}

}  // namespace

Json element_json(const AlgebraElement& x) {
  Json out;
  out["kind"] = "element";
  out["value"] = print_algebra(x);
  return out;
}

Json matrix_json(const AlgebraMatrix& m) {
  return matrix_document(m, [](const AlgebraElement& x) { return print_algebra(x); });
}

Json matrix_json(const ScalarMatrix& m) {
  return matrix_document(m, [](const QScalar& x) { return print_scalar(x); });
}

Json report_json(const VerificationReport& r) {
  Json out;
  out["kind"] = "report";
  out["suite"] = r.suite();
  out["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json entry;
    entry["name"] = c.name;
    entry["range"] = c.range;
    entry["passed"] = c.passed;
    entry["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
    if (c.note) entry["note"] = *c.note;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json pairing_json(const PairingResult& p) {
  Json out;
  out["winding"] = p.winding;
  out["side"] = p.side == Side::left ? "left" : "right";
  out["value"] = print_scalar(p.value);
  out["integer"] = p.simplified_integer ? Json(*p.simplified_integer) : Json(nullptr);
  return out;
}

Json pairing_table_json(std::span<const PairingResult> rows) {
  Json out;
  out["kind"] = "pairing_table";
  Json list = Json::array();
  for (const auto& p : rows) list.push_back(pairing_json(p));
  out["rows"] = std::move(list);
  return out;
}

std::string serialize_report(const VerificationReport& r) { return report_json(r).dump(2); }
std::string serialize_report(std::span<const PairingResult> rows) { return pairing_table_json(rows).dump(2); }
std::string serialize_report(const AlgebraMatrix& m) { return matrix_json(m).dump(2); }

}  // namespace slq
