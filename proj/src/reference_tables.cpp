#include "eddeg/reference_tables.hpp"

#include <stdexcept>

namespace eddeg {

namespace {

std::vector<ReferenceTable> build_tables() {
  std::vector<ReferenceTable> t;

  t.push_back({"multiview",
               "ED degrees of the multiview variety for n cameras; the values "
               "for n >= 4 are conjectural, fitted by the cubic polynomial "
               "9/2 n^3 - 21/2 n^2 + 8n - 4",
               {"cameras", "ed_degree"},
               {{"2", "6"},
                {"3", "47"},
                {"4", "148"},
                {"5", "336"},
                {"6", "638"},
                {"7", "1081"}}});

  t.push_back({"symmetric_rank",
               "ED degrees of symmetric s x s matrices of rank <= r in general "
               "coordinates; the r = 1 column equals (3^s - 1)/2",
               {"s", "r", "ed_degree"},
               {{"2", "1", "4"},
                {"3", "1", "13"},    {"3", "2", "13"},
                {"4", "1", "40"},    {"4", "2", "122"},   {"4", "3", "40"},
                {"5", "1", "121"},   {"5", "2", "1042"},  {"5", "3", "1042"},
                {"5", "4", "121"},
                {"6", "1", "364"},   {"6", "2", "8683"},  {"6", "3", "23544"},
                {"6", "4", "8683"},  {"6", "5", "364"},
                {"7", "1", "1093"},  {"7", "2", "72271"}, {"7", "3", "510835"},
                {"7", "4", "510835"}, {"7", "5", "72271"}, {"7", "6", "1093"}}});

  t.push_back({"determinantal",
               "ED degrees of s x t matrices of rank <= r in general "
               "coordinates (the invariant-coordinate counts are binomial and "
               "computed by the matrix formulas instead)",
               {"s", "t", "r", "ed_degree"},
               {{"2", "2", "1", "6"},
                {"2", "3", "1", "10"},
                {"2", "4", "1", "14"},
                {"2", "5", "1", "18"},
                {"3", "3", "1", "39"},   {"3", "3", "2", "39"},
                {"3", "4", "1", "83"},   {"3", "4", "2", "83"},
                {"3", "5", "1", "143"},  {"3", "5", "2", "143"},
                {"4", "4", "1", "284"},  {"4", "4", "2", "1350"},
                {"4", "4", "3", "284"},
                {"4", "5", "1", "676"},  {"4", "5", "2", "4806"},
                {"4", "5", "3", "676"},
                {"5", "5", "1", "2205"}, {"5", "5", "2", "55010"},
                {"5", "5", "3", "55010"}, {"5", "5", "4", "2205"}}});

  t.push_back({"aed_tensor",
               "Average ED degrees of rank-one tensor ensembles under the "
               "Frobenius Gaussian, next to the exact complex counts; obtained "
               "by large sampling runs of the absolute-determinant integral",
               {"format", "ed_degree", "aed_degree"},
               {{"2x2", "2", "2.000"},
                {"2x2x2", "6", "4.287"},
                {"2x2x2x2", "24", "11.06"},
                {"2x2x2x2x2", "120", "31.56"},
                {"2x2x2x2x2x2", "720", "98.82"},
                {"2x2x2x2x2x2x2", "5040", "333.9"},
                {"2x2x2x2x2x2x2x2", "40320", "1206"},
                {"2x2x2x2x2x2x2x2x2", "362880", "4611"},
                {"2x2x2x2x2x2x2x2x2x2", "3628800", "18430"},
                {"2x2x3", "8", "5.604"},
                {"2x2x4", "8", "5.556"},
                {"2x2x5", "8", "5.536"},
                {"2x3x3", "15", "8.817"},
                {"2x3x4", "18", "10.39"},
                {"2x3x5", "18", "10.28"},
                {"3x3x3", "37", "16.03"},
                {"3x3x4", "55", "21.28"},
                {"3x3x5", "61", "23.13"}}});

  t.push_back({"hurwitz",
               "ED and average ED degrees of the two-roots-summing-to-zero "
               "coefficient hypersurfaces: Gamma_n is the affine monic slice, "
               "the closure its projective cone; averages from sampling runs",
               {"n", "ed_affine", "ed_projective", "aed_affine", "aed_projective"},
               {{"3", "5", "2", "1.162", "2"},
                {"4", "5", "10", "1.883", "2.068"},
                {"5", "13", "6", "2.142", "3.052"},
                {"6", "9", "18", "2.416", "3.53"},
                {"7", "21", "10", "2.66", "3.742"}}});

  return t;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = build_tables();
  return tables;
}

const ReferenceTable& reference_table(const std::string& name) {
  for (const ReferenceTable& t : reference_tables())
    if (t.name == name) return t;
  std::string known;
  for (const ReferenceTable& t : reference_tables()) {
    if (!known.empty()) known += ", ";
    known += t.name;
  }
  throw std::domain_error("unknown reference table '" + name + "' (available: " + known + ")");
}

}  // namespace eddeg
