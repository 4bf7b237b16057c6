#include <fstream>
#include <sstream>

#include "ccf/challenge.hpp"

namespace fs = std::filesystem;

namespace ccf {

std::optional<Rational> GridRecord::rho() const {
    if (gamma == 0) return std::nullopt;
    return make_rational(alpha, gamma);
}

DataFormat format_for_path(const fs::path& path) {
    auto ext = path.extension();
    if (ext == ".fac") return DataFormat::factored;
    if (ext == ".csv") return DataFormat::csv;
    return DataFormat::brace;
}

namespace {

std::string rho_string(const GridRecord& r) {
    auto rho = r.rho();
    if (!rho) return "-";
    if (rho->get_den() == 1) return rho->get_num().get_str();
    return rho->get_str();
}

std::string factored_string(const BigInt& n) {
    if (n == 0) return "0";
    if (n == 1) return "1";
    if (n == -1) return "-1";
    return factorize(n).to_string();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(trim(tok));
    return out;
}

BigInt parse_value(const std::string& field, bool factored, long line) {
    try {
        if (!factored || field.find_first_of("*^") == std::string::npos) return BigInt(field);
        return parse_factored(field).reconstruct();
    } catch (const std::exception&) {
        throw datafile_error("bad integer field '" + field + "'", line);
    }
}

GridRecord parse_fields(const std::vector<std::string>& fields, bool factored, long line) {
    if (fields.size() != 5) throw datafile_error("expected 5 fields", line);
    GridRecord rec;
    try {
        rec.c = std::stol(fields[0]);
        rec.kappa = std::stol(fields[1]);
    } catch (...) {
        throw datafile_error("bad c/kappa field", line);
    }
    rec.alpha = parse_value(fields[3], factored, line);
    rec.gamma = parse_value(fields[4], factored, line);

    const std::string& rho_field = fields[2];
    auto stated_rho = [&]() -> std::optional<Rational> {
        if (rho_field == "-") return std::nullopt;
        Rational r;
        if (r.set_str(rho_field, 10) != 0 || r.get_den() == 0)
            throw datafile_error("bad rho field '" + rho_field + "'", line);
        r.canonicalize();
        return r;
    }();
    if (stated_rho != rec.rho())
        throw datafile_error("rho does not equal alpha/gamma", line);
    return rec;
}

} // namespace

std::string render_data_file(const std::vector<GridRecord>& records, DataFormat format) {
    std::ostringstream out;
    if (format == DataFormat::csv) out << "c,kappa,rho,alpha,gamma\n";
    for (const auto& r : records) {
        std::string alpha = format == DataFormat::factored ? factored_string(r.alpha)
                                                           : r.alpha.get_str();
        std::string gamma = format == DataFormat::factored ? factored_string(r.gamma)
                                                           : r.gamma.get_str();
        if (format == DataFormat::csv)
            out << r.c << "," << r.kappa << "," << rho_string(r) << "," << alpha << "," << gamma
                << "\n";
        else
            out << "{" << r.c << ", " << r.kappa << ", " << rho_string(r) << ", " << alpha << ", "
                << gamma << "}\n";
    }
    return out.str();
}

void emit_data_file(const std::vector<GridRecord>& records, const fs::path& path,
                    DataFormat format) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << render_data_file(records, format);
        if (!out) throw std::runtime_error("emit_data_file: failed to write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::vector<GridRecord> parse_data_file(const std::string& content, DataFormat format) {
    std::vector<GridRecord> out;
    std::istringstream in(content);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (format == DataFormat::csv) {
            if (lineno == 1 && t.rfind("c,", 0) == 0) continue;
            out.push_back(parse_fields(split(t, ','), false, lineno));
        } else {
            if (t.front() != '{' || t.back() != '}')
                throw datafile_error("expected a {...} record", lineno);
            out.push_back(parse_fields(split(t.substr(1, t.size() - 2), ','),
                                       format == DataFormat::factored, lineno));
        }
    }
    return out;
}

std::vector<GridRecord> read_data_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw datafile_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_data_file(buf.str(), format_for_path(path));
}

} // namespace ccf
