#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "invseq/errors.hpp"
#include "invseq/oracle.hpp"
#include "invseq/recurrences.hpp"
#include "invseq/refdata.hpp"
#include "invseq/sequence.hpp"

namespace py = pybind11;
using namespace invseq;

namespace {

py::int_ to_python(const BigCount& value) {
  const std::string digits = to_decimal(value);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list to_python(const std::vector<BigCount>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_python(v));
  return out;
}

BigCount from_python(const py::int_& value) {
  return parse_decimal(std::string(py::str(static_cast<py::handle>(value))));
}

Family family_named(const std::string& name) {
  for (Family f : {Family::b, Family::d, Family::g, Family::i, Family::l}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown sequence family '" + name + "' (expected b, d, g, i or l)");
}

py::list count(const std::string& patterns_text, std::size_t n, const std::string& method) {
  const auto patterns = PatternSet::parse(patterns_text);
  const auto family = solved_family(patterns);
  const bool use_recurrence =
      method == "recurrence" || (method == "auto" && family.has_value());
  if (method != "auto" && method != "recurrence" && method != "oracle") {
    throw std::invalid_argument("method must be auto, recurrence or oracle");
  }
  if (use_recurrence) {
    if (!family) throw NoRecurrenceError("no recurrence for " + patterns.to_string());
    return to_python(series(*family, n));
  }
  const auto limits = oracle::OracleLimits::from_environment();
  py::list out;
  for (std::size_t len = 1; len <= n; ++len) {
    out.append(py::int_(oracle::count_inv_seqs(len, patterns, limits)));
  }
  return out;
}

py::dict refined(const std::string& patterns_text, std::size_t n) {
  const auto counts = oracle::count_refined(n, PatternSet::parse(patterns_text),
                                            oracle::OracleLimits::from_environment());
  py::dict out;
  out["total"] = counts.total;
  out["by_max_and_distinct"] = counts.by_max_and_distinct;
  out["by_max_and_forb"] = counts.by_max_and_forb;
  out["by_max"] = counts.by_max();
  return out;
}

// Nonzero cells keyed (n, m) for g and (n, m, x) otherwise.
py::dict sequence_table(const std::string& family_name, std::size_t n_max) {
  const CountTable table = build_sequence_table(family_named(family_name), n_max);
  py::dict out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t m = 0; m < table.row_count(n); ++m) {
      for (std::size_t x = 0; x < table.row_width(n, m); ++x) {
        if (sgn(table(n, m, x)) == 0) continue;
        if (table.rank() == 2) {
          out[py::make_tuple(n, m)] = to_python(table(n, m));
        } else {
          out[py::make_tuple(n, m, x)] = to_python(table(n, m, x));
        }
      }
    }
  }
  return out;
}

py::list reference_rows_py() {
  py::list out;
  for (const ReferenceRow& row : reference_rows()) {
    py::dict item;
    py::list sets;
    for (const auto& set : row.pattern_sets) sets.append(set.to_string());
    item["pattern_sets"] = sets;
    item["terms"] = to_python(row.terms);
    item["source"] = row.source;
    item["oeis_id"] = row.oeis_id;
    out.append(item);
  }
  return out;
}

py::dict check_py(const std::string& patterns_text, const std::vector<py::int_>& terms) {
  std::vector<BigCount> computed;
  for (const auto& t : terms) computed.push_back(from_python(t));
  const CheckReport report = check(PatternSet::parse(patterns_text), computed);
  py::dict out;
  out["term_matches"] = report.term_matches;
  out["first_mismatch"] = report.first_mismatch;
  out["compared"] = report.compared;
  out["full_match"] = report.full_match();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting pattern-avoiding inversion sequences";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<NoRecurrenceError>(m, "NoRecurrenceError", PyExc_LookupError);
  py::register_exception<NoReferenceDataError>(m, "NoReferenceDataError", PyExc_LookupError);

  m.def("is_inversion_sequence",
        [](const Sequence& s) { return is_inversion_sequence(s); }, py::arg("seq"));
  m.def("contains",
        [](const Sequence& s, const std::string& p) { return contains_pattern(s, Pattern::parse(p)); },
        py::arg("seq"), py::arg("pattern"));
  m.def("avoids",
        [](const Sequence& s, const std::string& ps) { return avoids_all(s, PatternSet::parse(ps)); },
        py::arg("seq"), py::arg("patterns"));
  m.def("forb",
        [](const Sequence& s, const std::string& ps) { return forb_direct(s, PatternSet::parse(ps)); },
        py::arg("seq"), py::arg("patterns"));
  m.def("forb_210", [](const Sequence& s) { return forb_210(s); }, py::arg("seq"));
  m.def("forb_110", [](const Sequence& s) { return forb_110(s); }, py::arg("seq"));
  m.def("normalize_patterns",
        [](const std::string& ps) { return PatternSet::parse(ps).to_string(); },
        py::arg("patterns"));

  m.def("enumerate",
        [](const std::string& ps, std::size_t n) {
          return oracle::enumerate_inv_seqs(n, PatternSet::parse(ps),
                                            oracle::OracleLimits::from_environment());
        },
        py::arg("patterns"), py::arg("n"));
  m.def("count", &count, py::arg("patterns"), py::arg("n"), py::arg("method") = "auto");
  m.def("refined", &refined, py::arg("patterns"), py::arg("n"));
  m.def("solved_family",
        [](const std::string& ps) -> std::optional<std::string> {
          const auto f = solved_family(PatternSet::parse(ps));
          return f ? std::optional(to_string(*f)) : std::nullopt;
        },
        py::arg("patterns"));
  m.def("sequence_table", &sequence_table, py::arg("family"), py::arg("n_max"));

  m.def("stirling1", [](std::size_t n, std::size_t k) { return to_python(stirling1_unsigned(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_a", [](std::size_t n, std::size_t k) { return to_python(count_a(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_c", [](std::size_t n, std::size_t k) { return to_python(count_c(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_e", [](std::size_t n, std::size_t k) { return to_python(count_e(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_f", [](std::size_t n, std::size_t k) { return to_python(count_f(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def("reference_rows", &reference_rows_py);
  m.def("check", &check_py, py::arg("patterns"), py::arg("terms"));
}
