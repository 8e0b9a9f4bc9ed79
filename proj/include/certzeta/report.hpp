#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certzeta/numeric_core.hpp"

namespace certzeta::report {

/// Parses [+-]float, [+-]floati or [+-]float[+-]floati ("1.5", "2+3i",
/// "-0.5-1i", "10i", "i"). Throws DomainError on anything else.
Complex parse_complex(std::string_view text);

/// Shortest form that parse_complex reads back exactly.
std::string format_complex(Complex z);

/// 17 significant digits, '.' separator, independent of the locale.
std::string format_double(double x);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
    std::vector<double> values() const;
};

struct SweepSpec {
    std::vector<Complex> s_list;
    Range a_modulus;
    Range a_arg;
    std::vector<int> N_list;
    bool with_truth = true;
};

/// Throws DomainError for empty lists, non-positive counts, moduli <= 0 or
/// arguments outside (-pi, pi).
void validate(const SweepSpec& spec);

struct SweepRow {
    Complex s;
    double a_mod = 0.0;
    double a_arg = 0.0;
    int N = 0;
    std::optional<double> true_abs;
    std::optional<double> eq12;
    std::optional<double> eq111;
    std::optional<double> eq113;
    std::optional<int> case892;
};

/// Rows in grid order: s outermost, then |a|, arg a, N. Points violating
/// the remainder hypotheses keep every bound field empty.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "s_re,s_im,a_mod,a_arg,N,true_abs,eq12,eq111,eq113,ratio12,ratio111,ratio113,case892";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace certzeta::report
