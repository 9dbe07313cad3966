#include "orbchi/format.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

namespace orbchi {

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "plain") {
        return OutputFormat::plain;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "latex") {
        return OutputFormat::latex;
    }
    return std::nullopt;
}

std::string decimal_string(const Rational& r)
{
    const mpf_class value(r.raw(), 256);
    std::vector<char> buf(64);
    const int n = gmp_snprintf(buf.data(), buf.size(), "%.15Fg", value.get_mpf_t());
    if (n >= static_cast<int>(buf.size())) {
        buf.resize(static_cast<std::size_t>(n) + 1);
        gmp_snprintf(buf.data(), buf.size(), "%.15Fg", value.get_mpf_t());
    }
    return std::string(buf.data());
}

std::string latex_rational(const Rational& r)
{
    if (r.is_integer()) {
        return r.str();
    }
    Integer num = r.numerator();
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string render_table(const EulerTable& table, OutputFormat format, bool with_decimal)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::plain:
        for (const auto& [n, value] : table.entries) {
            os << n << ": " << value;
            if (with_decimal) {
                os << "  (decimal approx. " << decimal_string(value) << ')';
            }
            os << '\n';
        }
        break;
    case OutputFormat::csv:
        os << (with_decimal ? "loops,value,decimal_approx\n" : "loops,value\n");
        for (const auto& [n, value] : table.entries) {
            os << n << ',' << value;
            if (with_decimal) {
                os << ',' << decimal_string(value);
            }
            os << '\n';
        }
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["species"] = table.species_name;
        doc["connected"] = table.connected;
        doc["entries"] = nlohmann::ordered_json::object();
        for (const auto& [n, value] : table.entries) {
            doc["entries"][std::to_string(n)] = value.str();
        }
        if (with_decimal) {
            doc["decimal_approx"] = nlohmann::ordered_json::object();
            for (const auto& [n, value] : table.entries) {
                doc["decimal_approx"][std::to_string(n)] = decimal_string(value);
            }
        }
        os << doc.dump() << '\n';
        break;
    }
    case OutputFormat::latex:
        os << "\\begin{tabular}{c|c}\n";
        for (const auto& [n, value] : table.entries) {
            os << n << " & " << latex_rational(value) << " \\\\";
            if (with_decimal) {
                os << " % decimal approx. " << decimal_string(value);
            }
            os << '\n';
        }
        os << "\\end{tabular}\n";
        break;
    }
    return os.str();
}

} // namespace orbchi
