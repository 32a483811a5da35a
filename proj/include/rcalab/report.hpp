#pragma once

// Serialization of (a,q) series and the CLI report layout (json, aligned text, LaTeX).
// JSON for a series: {"terms": [[ea2, eq2, "num/den"], ...], "qdenom": [i, ...]}, exponents doubled.

#include "json.hpp"
#include "rcalab/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace rcalab {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const LaurentAQ& f) {
    ojson terms = ojson::array();
    for (auto& [e, c] : f.terms()) terms.push_back(ojson::array({e.first, e.second, c.get_str()}));
    return ojson{{"terms", terms}, {"qdenom", ojson::array()}};
}

inline ojson to_json(const RationalAQ& f) {
    ojson j = to_json(f.numerator());
    j["qdenom"] = f.qdenom();
    return j;
}

inline RationalAQ rational_aq_from_json(const ojson& j) {
    LaurentAQ num;
    for (auto& t : j.at("terms")) num.add_term(t.at(0).get<int>(), t.at(1).get<int>(), parse_rational(t.at(2).get<std::string>()));
    return RationalAQ(num, j.at("qdenom").get<std::vector<int>>());
}

inline std::string latex_exponent(int e2) {
    if (e2 % 2 == 0) return std::to_string(e2 / 2);
    return (e2 < 0 ? "-" : "") + std::string("\\frac{") + std::to_string(std::abs(e2)) + "}{2}";
}

inline std::string latex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
        out += ch;
    }
    return out;
}

inline std::string latex_rational(const Rational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return "\\frac{" + Integer(abs(c.get_num())).get_str() + "}{" + c.get_den().get_str() + "}";
}

inline std::string to_latex(const LaurentAQ& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        Rational mag = abs(c);
        std::string vars;
        if (e.first) vars += e.first == 2 ? "a" : "a^{" + latex_exponent(e.first) + "}";
        if (e.second) vars += e.second == 2 ? "q" : "q^{" + latex_exponent(e.second) + "}";
        if (mag != 1 || vars.empty()) out += latex_rational(mag);
        out += vars;
    }
    return out;
}

inline std::string to_latex(const RationalAQ& f) {
    if (f.qdenom().empty()) return to_latex(f.numerator());
    std::string den;
    for (int i : f.qdenom()) den += i == 1 ? "(1-q)" : "(1-q^{" + std::to_string(i) + "})";
    return "\\frac{" + to_latex(f.numerator()) + "}{" + den + "}";
}

struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;        // text cells
    std::vector<std::vector<std::string>> latex_rows;  // same shape
    ojson json_rows = ojson::array();
};

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    ojson& meta() { return meta_; }

    void add(const std::string& label, const RationalAQ& f) { push(label, to_json(f), f.str(), to_latex(f)); }
    void add(const std::string& label, const LaurentAQ& f) { push(label, to_json(f), f.str(), to_latex(f)); }
    void add_value(const std::string& label, const ojson& v) {
        push(label, v, v.is_string() ? v.get<std::string>() : v.dump(), "");
    }

    ReportTable& table() { return table_; }

    std::string render(const std::string& format) const {
        if (format == "json") return render_json();
        if (format == "text") return render_text();
        if (format == "latex") return render_latex();
        throw std::invalid_argument("unknown format " + format);
    }

private:
    struct Item {
        std::string label;
        ojson json;
        std::string text, latex;
    };

    void push(const std::string& label, ojson j, std::string text, std::string latex) {
        items_.push_back({label, std::move(j), std::move(text), std::move(latex)});
    }

    std::string render_json() const {
        ojson out{{"command", command_}, {"meta", meta_}};
        ojson results = ojson::object();
        for (auto& it : items_) results[it.label] = it.json;
        out["results"] = results;
        if (!table_.columns.empty()) out["table"] = ojson{{"columns", table_.columns}, {"rows", table_.json_rows}};
        return out.dump(2) + "\n";
    }

    std::string render_text() const {
        std::ostringstream os;
        os << "# " << command_ << "\n";
        for (auto& [k, v] : meta_.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        for (auto& it : items_) os << it.label << " = " << it.text << "\n";
        if (!table_.columns.empty()) {
            std::vector<std::size_t> w;
            for (auto& c : table_.columns) w.push_back(c.size());
            for (auto& r : table_.rows)
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    os << cells[i];
                    if (i + 1 < cells.size()) os << std::string(w[i] - cells[i].size() + 2, ' ');
                }
                os << "\n";
            };
            line(table_.columns);
            for (auto& r : table_.rows) line(r);
        }
        return os.str();
    }

    std::string render_latex() const {
        std::ostringstream os;
        os << "% rcalab " << command_ << "\n";
        for (auto& [k, v] : meta_.items()) os << "% " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        bool any = false;
        for (auto& it : items_)
            if (!it.latex.empty()) any = true;
        if (any) {
            os << "\\begin{align*}\n";
            for (auto& it : items_)
                if (!it.latex.empty()) os << "\\text{" << latex_escape(it.label) << "} &= " << it.latex << " \\\\\n";
            os << "\\end{align*}\n";
        }
        if (!table_.columns.empty()) {
            os << "\\begin{tabular}{" << std::string(table_.columns.size(), 'l') << "}\n";
            for (std::size_t i = 0; i < table_.columns.size(); ++i)
                os << table_.columns[i] << (i + 1 < table_.columns.size() ? " & " : " \\\\ \\hline\n");
            for (auto& r : table_.latex_rows)
                for (std::size_t i = 0; i < r.size(); ++i) os << "$" << r[i] << "$" << (i + 1 < r.size() ? " & " : " \\\\\n");
            os << "\\end{tabular}\n";
        }
        return os.str();
    }

    std::string command_;
    ojson meta_ = ojson::object();
    std::vector<Item> items_;
    ReportTable table_;
};

}  // namespace rcalab
