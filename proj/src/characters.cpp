#include "affrep/characters.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "affrep/pi_rep.hpp"

namespace affrep {

std::complex<double> unit_phase(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> chi(const FieldContext& k, const FieldElement& b, const FieldElement& x) {
  return unit_phase(k.trace(k.mul(b, x)), k.p());
}

std::complex<double> mult_character(const FieldContext& k, int j, const FieldElement& x) {
  return unit_phase(static_cast<long long>(j) * k.log(x), k.q() - 1);
}

std::complex<double> one_dim_rep_value(const AffineGroup& group, int j, const GroupElement& g) {
  return mult_character(group.field(), j, group.proj(g));
}

double CharacterTable::row_orthonormality_residual() const {
  const int rows = static_cast<int>(values.rows());
  long long order = 0;
  for (int s : class_sizes) order += s;
  double worst = 0.0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      std::complex<double> ip{0.0, 0.0};
      for (int c = 0; c < rows; ++c) {
        ip += static_cast<double>(class_sizes[c]) * values(i, c) * std::conj(values(j, c));
      }
      ip /= static_cast<double>(order);
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double CharacterTable::column_orthogonality_residual() const {
  const int cols = static_cast<int>(values.cols());
  long long order = 0;
  for (int s : class_sizes) order += s;
  double worst = 0.0;
  for (int c1 = 0; c1 < cols; ++c1) {
    for (int c2 = 0; c2 < cols; ++c2) {
      std::complex<double> ip{0.0, 0.0};
      for (int r = 0; r < cols; ++r) ip += values(r, c1) * std::conj(values(r, c2));
      double expected = c1 == c2 ? static_cast<double>(order) / class_sizes[c1] : 0.0;
      worst = std::max(worst, std::abs(ip - expected));
    }
  }
  return worst;
}

CharacterTable character_table(const PiRep& rep) {
  const AffineGroup& group = rep.group();
  const FieldContext& k = group.field();
  const int q = k.q();

  CharacterTable t;
  auto classes = group.conjugacy_classes();
  t.values.resize(q, static_cast<int>(classes.size()));
  for (const auto& cls : classes) {
    t.class_reps.push_back(cls.front());
    t.class_sizes.push_back(static_cast<int>(cls.size()));
  }
  for (int j = 0; j < q - 1; ++j) {
    t.row_labels.push_back("sigma_" + std::to_string(j));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      t.values(j, static_cast<int>(c)) = one_dim_rep_value(group, j, t.class_reps[c]);
    }
  }
  t.row_labels.push_back("pi");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    t.values(q - 1, static_cast<int>(c)) = rep.pi_character(t.class_reps[c]);
  }
  return t;
}

namespace {

std::string complex_cell(std::complex<double> z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string character_table_csv(const AffineGroup& group, const CharacterTable& table) {
  const FieldContext& k = group.field();
  std::string out = "irrep";
  for (const GroupElement& rep : table.class_reps) {
    out += ",(" + std::to_string(k.value(rep.a)) + ";" + std::to_string(k.value(rep.b)) + ")";
  }
  out += "\n";
  for (int r = 0; r < table.values.rows(); ++r) {
    out += table.row_labels[r];
    for (int c = 0; c < table.values.cols(); ++c) {
      out += "," + complex_cell(table.values(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace affrep
