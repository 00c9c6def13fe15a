#include "circletop/formats.hpp"

#include <sstream>

namespace circletop {

std::optional<OutputFormat> format_from_name(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "tsv") return OutputFormat::tsv;
    if (name == "json") return OutputFormat::json;
    if (name == "bfile") return OutputFormat::bfile;
    return std::nullopt;
}

namespace {

char delimiter(OutputFormat fmt) {
    return fmt == OutputFormat::tsv ? '\t' : ',';
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string render_table(const Triangle& t, OutputFormat fmt) {
    std::ostringstream out;
    const int lo = family_first_row(t.family());
    if (fmt == OutputFormat::bfile) {
        for (int n = lo; n <= t.max_n(); ++n)
            out << n << ' ' << t.row_total(n) << '\n';
        return out.str();
    }
    if (fmt == OutputFormat::json) {
        out << "{\"family\":\"" << family_name(t.family()) << "\"";
        if (t.family() == FamilyId::KC)
            out << ",\"k\":" << t.shape_count();
        out << ",\"rows\":[";
        for (int n = lo; n <= t.max_n(); ++n) {
            if (n > lo)
                out << ',';
            out << "{\"n\":" << n << ",\"total\":" << t.row_total(n) << ",\"cells\":[";
            for (int f = 1; f <= n; ++f)
                out << (f > 1 ? "," : "") << t.cell(n, f);
            out << "]}";
        }
        out << "]}\n";
        return out.str();
    }
    const char sep = delimiter(fmt);
    for (int n = lo; n <= t.max_n(); ++n) {
        out << n << sep << t.row_total(n);
        for (int f = 1; f <= n; ++f)
            out << sep << t.cell(n, f);
        out << '\n';
    }
    return out.str();
}

std::string render_sequence(const std::string& name, const IntSeq& values, int first_index,
                            OutputFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
    case OutputFormat::bfile:
        for (std::size_t i = 0; i < values.size(); ++i)
            out << first_index + static_cast<int>(i) << ' ' << values[i] << '\n';
        break;
    case OutputFormat::json:
        out << "{\"name\":\"" << json_escape(name) << "\",\"offset\":" << first_index
            << ",\"values\":[";
        for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? "," : "") << values[i];
        out << "]}\n";
        break;
    default:
        for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? std::string(1, delimiter(fmt)) : "") << values[i];
        out << '\n';
        break;
    }
    return out.str();
}

std::string render_enumeration(const Enumeration& en, OutputFormat fmt) {
    if (fmt == OutputFormat::bfile)
        throw ContractViolation("b-file output applies to sequences, not listings");
    std::ostringstream out;
    if (fmt == OutputFormat::json) {
        out << "{\"family\":\"" << family_name(en.family) << "\",\"n\":" << en.n
            << ",\"expressions\":[";
        for (std::size_t i = 0; i < en.exprs.size(); ++i) {
            if (i)
                out << ',';
            out << "{\"f\":" << en.exprs[i].factor_count() << ",\"expr\":\""
                << json_escape(serialize(en.exprs[i])) << "\"}";
        }
        out << "]}\n";
        return out.str();
    }
    const char sep = delimiter(fmt);
    for (const Expr& e : en.exprs)
        out << e.factor_count() << sep << serialize(e) << '\n';
    return out.str();
}

std::string render_clusters(int n, const std::vector<std::vector<Expr>>& clusters,
                            OutputFormat fmt) {
    if (fmt == OutputFormat::bfile)
        throw ContractViolation("b-file output applies to sequences, not listings");
    std::ostringstream out;
    if (fmt == OutputFormat::json) {
        out << "{\"n\":" << n << ",\"clusters\":[";
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (i)
                out << ',';
            out << '[';
            for (std::size_t j = 0; j < clusters[i].size(); ++j)
                out << (j ? "," : "") << '"' << json_escape(serialize(clusters[i][j])) << '"';
            out << ']';
        }
        out << "]}\n";
        return out.str();
    }
    const char sep = delimiter(fmt);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        out << i + 1 << sep << clusters[i].size() << sep;
        for (std::size_t j = 0; j < clusters[i].size(); ++j)
            out << (j ? " " : "") << serialize(clusters[i][j]);
        out << '\n';
    }
    return out.str();
}

} // namespace circletop
