#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "certzeta/errors.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/report.hpp"

namespace certzeta::report {
namespace {

bool parse_real(std::string_view t, double& out) {
    if (t.empty()) return false;
    std::size_t start = t.front() == '+' ? 1 : 0;  // from_chars rejects a leading '+'
    if (start == 1 && (t.size() == 1 || t[1] == '-' || t[1] == '+')) return false;
    const char* first = t.data() + start;
    const char* last = t.data() + t.size();
    const auto res = std::from_chars(first, last, out, std::chars_format::general);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

// Unsigned-or-signed coefficient of i: "" / "+" / "-" mean +-1.
bool parse_imag(std::string_view t, double& out) {
    if (t.empty() || t == "+") {
        out = 1.0;
        return true;
    }
    if (t == "-") {
        out = -1.0;
        return true;
    }
    return parse_real(t, out);
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::optional<double> ratio(const std::optional<double>& bound, const std::optional<double>& truth) {
    if (!bound || !truth || !(*truth > 0.0)) return std::nullopt;
    return *bound / *truth;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double field_double(const std::string& f) {
    double v = 0.0;
    if (!parse_real(f, v)) throw DomainError("malformed number in CSV: '" + f + "'");
    return v;
}

std::optional<double> field_opt(const std::string& f) {
    if (f.empty()) return std::nullopt;
    return field_double(f);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view t = text;
    auto fail = [&]() -> Complex {
        throw DomainError("cannot parse complex literal '" + std::string(text) +
                          "'; expected [+-]float[+-]floati, e.g. 2, 2+3i, -0.5-1i, 10i");
    };
    if (t.empty()) return fail();
    double re = 0.0, im = 0.0;
    if (t.back() != 'i') {
        if (!parse_real(t, re)) return fail();
        return {re, 0.0};
    }
    const std::string_view body = t.substr(0, t.size() - 1);
    // split at the last sign that is not the leading one and not an exponent sign
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    if (cut == std::string_view::npos) {
        if (!parse_imag(body, im)) return fail();
        return {0.0, im};
    }
    if (!parse_real(body.substr(0, cut), re) || !parse_imag(body.substr(cut), im)) return fail();
    return {re, im};
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = format_double(z.real());
    const std::string im = format_double(z.imag());
    if (im.front() != '-') out.push_back('+');
    return out + im + "i";
}

std::vector<double> Range::values() const {
    std::vector<double> v;
    if (count == 1) return {lo};
    for (int k = 0; k < count; ++k) v.push_back(lo + (hi - lo) * k / (count - 1));
    return v;
}

void validate(const SweepSpec& spec) {
    if (spec.s_list.empty()) throw DomainError("sweep needs at least one s value");
    if (spec.N_list.empty()) throw DomainError("sweep needs a nonempty N list");
    for (int N : spec.N_list)
        if (N < 1 || N > 64) throw DomainError("sweep N values must lie in 1..64");
    if (spec.a_modulus.count < 1 || spec.a_arg.count < 1) throw DomainError("sweep range counts must be positive");
    for (double m : spec.a_modulus.values())
        if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("sweep moduli must be positive");
    for (double g : spec.a_arg.values())
        if (!(std::abs(g) < kPi)) throw DomainError("sweep arguments must lie in (-pi, pi)");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<SweepRow> rows;
    for (const Complex s : spec.s_list) {
        for (const double mod : spec.a_modulus.values()) {
            for (const double arg : spec.a_arg.values()) {
                for (const int N : spec.N_list) {
                    SweepRow row;
                    row.s = s;
                    row.a_mod = mod;
                    row.a_arg = arg;
                    row.N = N;
                    const remainder::Context ctx{s, std::polar(mod, arg), N};
                    try {
                        remainder::validate(ctx);
                    } catch (const DomainError&) {
                        rows.push_back(row);
                        continue;
                    }
                    row.eq12 = remainder::bound_terminant_sup(ctx);
                    row.eq111 = remainder::bound_secant(ctx);
                    row.eq113 = remainder::bound_chi(ctx);
                    if (const auto r = remainder::bound_real_order(ctx)) row.case892 = r->sector_case;
                    if (spec.with_truth) row.true_abs = std::abs(remainder::true_remainder(ctx).value);
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << format_double(r.s.real()) << ',' << format_double(r.s.imag()) << ',' << format_double(r.a_mod) << ','
            << format_double(r.a_arg) << ',' << r.N << ',' << opt(r.true_abs) << ',' << opt(r.eq12) << ','
            << opt(r.eq111) << ',' << opt(r.eq113) << ',' << opt(ratio(r.eq12, r.true_abs)) << ','
            << opt(ratio(r.eq111, r.true_abs)) << ',' << opt(ratio(r.eq113, r.true_abs)) << ',';
        if (r.case892) out << *r.case892;
        out << '\n';
    }
}

std::vector<SweepRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw DomainError("unexpected CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 13) throw DomainError("CSV row has the wrong number of fields");
        SweepRow r;
        r.s = {field_double(f[0]), field_double(f[1])};
        r.a_mod = field_double(f[2]);
        r.a_arg = field_double(f[3]);
        r.N = static_cast<int>(field_double(f[4]));
        r.true_abs = field_opt(f[5]);
        r.eq12 = field_opt(f[6]);
        r.eq111 = field_opt(f[7]);
        r.eq113 = field_opt(f[8]);
        if (!f[12].empty()) r.case892 = static_cast<int>(field_double(f[12]));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace certzeta::report
