#include "atomlat/formats.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace atomlat {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over one line; columns are 1-based for diagnostics.
struct LineScanner {
    const std::string& text;
    int line_no;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(message + " at line " + std::to_string(line_no) + ", column " +
                             std::to_string(at + 1),
                         line_no, static_cast<int>(at + 1));
    }

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool at_end() {
        skip_spaces();
        return pos >= text.size();
    }

    bool consume(char c) {
        skip_spaces();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::pair<std::string, std::size_t> name() {
        skip_spaces();
        const std::size_t start = pos;
        if (pos >= text.size() || !name_start(text[pos]))
            fail("expected constant name", pos);
        while (pos < text.size() && name_char(text[pos]))
            ++pos;
        return {text.substr(start, pos - start), start};
    }
};

Term parse_term(LineScanner& scan, const ConstantTable& table) {
    CSet constants(table.size());
    while (true) {
        auto [word, at] = scan.name();
        auto index = table.index_of(word);
        if (!index)
            scan.fail("undeclared constant '" + word + "'", at);
        constants.set(*index);
        if (!scan.consume('+'))
            break;
    }
    return Term{std::move(constants)};
}

std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r')
                current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r')
            current.pop_back();
        lines.push_back(std::move(current));
    }
    return lines;
}

} // namespace

Problem parse_problem(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);

    TablePtr table;
    std::vector<Duple> assertions;
    std::vector<Duple> queries;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string body = strip_comment(lines[i]);
        LineScanner scan{body, static_cast<int>(i + 1)};
        if (scan.at_end())
            continue;

        auto [keyword, keyword_at] = scan.name();
        if (!scan.consume(':'))
            scan.fail("expected ':' after '" + keyword + "'", scan.pos);

        if (keyword == "constants") {
            if (table)
                scan.fail("duplicate constants line", keyword_at);
            std::vector<std::string> names;
            do {
                auto [word, at] = scan.name();
                if (std::find(names.begin(), names.end(), word) != names.end())
                    scan.fail("duplicate constant '" + word + "'", at);
                names.push_back(word);
            } while (!scan.at_end());
            table = intern_constants(std::move(names));
            continue;
        }

        if (keyword != "assert" && keyword != "query")
            scan.fail("unknown directive '" + keyword + "'", keyword_at);
        if (!table)
            scan.fail("'" + keyword + "' before the constants line", keyword_at);

        Term left = parse_term(scan, *table);
        scan.skip_spaces();
        if (scan.pos + 1 >= body.size() || body[scan.pos] != '<' || body[scan.pos + 1] != '=')
            scan.fail("expected '<=' between terms", scan.pos);
        scan.pos += 2;
        Term right = parse_term(scan, *table);
        if (!scan.at_end())
            scan.fail("unexpected trailing input", scan.pos);

        Duple duple{std::move(left), std::move(right)};
        if (keyword == "assert") {
            if (std::find(assertions.begin(), assertions.end(), duple) == assertions.end())
                assertions.push_back(std::move(duple));
        } else {
            queries.push_back(std::move(duple));
        }
    }

    if (!table)
        throw ParseError("missing constants line", static_cast<int>(lines.size()) + 1, 1);
    return Problem{std::move(table), std::move(assertions), std::move(queries)};
}

std::string term_to_string(const ConstantTable& table, const Term& t) {
    std::string out;
    for (uint32_t i : t.constants.indices()) {
        if (!out.empty())
            out += '+';
        out += table.name(i);
    }
    return out;
}

std::string atom_to_string(const ConstantTable& table, const Atom& phi) {
    std::string out = "{";
    bool first = true;
    for (uint32_t i : phi.ucs.indices()) {
        if (!first)
            out += ',';
        first = false;
        out += table.name(i);
    }
    out += '}';
    return out;
}

std::string serialize_problem(const Problem& problem) {
    std::string out = "constants:";
    for (const std::string& name : problem.table->names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (const Duple& r : problem.assertions)
        out += "assert: " + term_to_string(*problem.table, r.left) + " <= " +
               term_to_string(*problem.table, r.right) + "\n";
    for (const Duple& r : problem.queries)
        out += "query: " + term_to_string(*problem.table, r.left) + " <= " +
               term_to_string(*problem.table, r.right) + "\n";
    return out;
}

std::string serialize_model(const Model& m, SerializeStyle style) {
    if (style == SerializeStyle::text) {
        std::string out;
        for (const Atom& phi : m.atoms())
            out += "atom " + atom_to_string(*m.table(), phi) + "\n";
        return out;
    }
    nlohmann::json doc;
    doc["constants"] = m.table()->names();
    auto& atoms = doc["atoms"] = nlohmann::json::array();
    for (const Atom& phi : m.atoms()) {
        nlohmann::json names = nlohmann::json::array();
        for (uint32_t i : phi.ucs.indices())
            names.push_back(m.table()->name(i));
        atoms.push_back(std::move(names));
    }
    return doc.dump() + "\n";
}

Model parse_model(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid model document: ") + e.what(), 1, 1);
    }
    if (!doc.is_object() || !doc.contains("constants") || !doc.contains("atoms"))
        throw ParseError("model document needs 'constants' and 'atoms' fields", 1, 1);

    std::vector<std::string> names;
    for (const auto& item : doc["constants"]) {
        if (!item.is_string())
            throw ParseError("constant names must be strings", 1, 1);
        names.push_back(item.get<std::string>());
    }
    TablePtr table = intern_constants(std::move(names));

    std::vector<Atom> atoms;
    for (const auto& entry : doc["atoms"]) {
        CSet ucs(table->size());
        for (const auto& item : entry) {
            if (!item.is_string())
                throw ParseError("atom members must be constant names", 1, 1);
            auto index = table->index_of(item.get<std::string>());
            if (!index)
                throw ParseError("atom mentions undeclared constant '" +
                                     item.get<std::string>() + "'",
                                 1, 1);
            ucs.set(*index);
        }
        atoms.push_back(Atom{std::move(ucs)});
    }
    return Model::create(std::move(table), std::move(atoms), false);
}

std::vector<Atom> parse_model_atoms(const TablePtr& table, const std::string& text) {
    if (!table)
        throw ValueError("parse_model_atoms requires a constant table");
    const std::vector<std::string> lines = split_lines(text);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string body = strip_comment(lines[i]);
        LineScanner scan{body, static_cast<int>(i + 1)};
        if (scan.at_end())
            continue;
        auto [keyword, keyword_at] = scan.name();
        if (keyword != "atom")
            scan.fail("expected 'atom' line", keyword_at);
        if (!scan.consume('{'))
            scan.fail("expected '{'", scan.pos);
        CSet ucs(table->size());
        do {
            auto [word, at] = scan.name();
            auto index = table->index_of(word);
            if (!index)
                scan.fail("undeclared constant '" + word + "'", at);
            ucs.set(*index);
        } while (scan.consume(','));
        if (!scan.consume('}'))
            scan.fail("expected '}'", scan.pos);
        if (!scan.at_end())
            scan.fail("unexpected trailing input", scan.pos);
        atoms.push_back(Atom{std::move(ucs)});
    }
    return atoms;
}

std::string hasse_dot(const Model& m, unsigned guard) {
    const uint32_t n = m.universe();
    const std::vector<uint64_t> below = constants_below_table(m, guard);
    const uint64_t full = (uint64_t{1} << n) - 1;

    // Terms with the same constants-below set are the same element; each
    // class is labelled by its minimal term in (size, lex) order.
    std::map<uint64_t, uint64_t> class_rep; // below value -> representative mask
    for (uint64_t t = 1; t <= full; ++t) {
        auto [it, inserted] = class_rep.try_emplace(below[t], t);
        if (!inserted &&
            size_lex_less(CSet::from_mask(n, t), CSet::from_mask(n, it->second)))
            it->second = t;
    }

    std::vector<uint64_t> reps;
    reps.reserve(class_rep.size());
    for (const auto& [key, rep] : class_rep)
        reps.push_back(rep);
    std::sort(reps.begin(), reps.end(), [n](uint64_t a, uint64_t b) {
        return size_lex_less(CSet::from_mask(n, a), CSet::from_mask(n, b));
    });

    auto le = [&](uint64_t s, uint64_t t) { return (s & ~below[t]) == 0; };
    auto strictly_less = [&](uint64_t s, uint64_t t) { return le(s, t) && !le(t, s); };

    std::ostringstream out;
    out << "digraph model {\n";
    for (uint64_t rep : reps)
        out << "  \"" << term_to_string(*m.table(), Term{CSet::from_mask(n, rep)}) << "\";\n";
    for (uint64_t lower : reps) {
        for (uint64_t upper : reps) {
            if (!strictly_less(lower, upper))
                continue;
            bool covering = true;
            for (uint64_t mid : reps) {
                if (strictly_less(lower, mid) && strictly_less(mid, upper)) {
                    covering = false;
                    break;
                }
            }
            if (covering)
                out << "  \"" << term_to_string(*m.table(), Term{CSet::from_mask(n, lower)})
                    << "\" -> \""
                    << term_to_string(*m.table(), Term{CSet::from_mask(n, upper)}) << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace atomlat
