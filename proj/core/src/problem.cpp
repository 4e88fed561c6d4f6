#include "slicekit/problem.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "slicekit/parse.hpp"

namespace slicekit {

namespace {

using TomlValue = std::variant<std::string, std::int64_t, std::vector<std::string>>;

struct TomlEntry {
    TomlValue value;
    std::size_t line;
};

struct TomlTable {
    std::vector<std::pair<std::string, TomlEntry>> entries;
    std::size_t line = 0;

    const TomlEntry* find(std::string_view key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
};

using TomlDocument = std::vector<std::pair<std::string, TomlTable>>;

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw ProblemFormatError("line " + std::to_string(line) + ": " + what);
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Strip a trailing comment, respecting quoted strings.
std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

std::string parse_quoted(std::string_view s, std::size_t line) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        fail_at(line, "expected a double-quoted string");
    const std::string_view body = s.substr(1, s.size() - 2);
    if (body.find('"') != std::string_view::npos)
        fail_at(line, "embedded quotes are not supported");
    return std::string(body);
}

TomlValue parse_value(std::string_view s, std::size_t line) {
    s = trim(s);
    if (s.empty()) fail_at(line, "missing value");
    if (s.front() == '"') return parse_quoted(s, line);
    if (s.front() == '[') {
        if (s.back() != ']') fail_at(line, "unterminated array");
        std::vector<std::string> items;
        std::string_view body = trim(s.substr(1, s.size() - 2));
        while (!body.empty()) {
            if (body.front() != '"') fail_at(line, "arrays may contain only quoted strings");
            const auto close = body.find('"', 1);
            if (close == std::string_view::npos) fail_at(line, "unterminated string in array");
            items.emplace_back(body.substr(1, close - 1));
            body = trim(body.substr(close + 1));
            if (!body.empty()) {
                if (body.front() != ',') fail_at(line, "expected ',' between array items");
                body = trim(body.substr(1));
                if (body.empty()) fail_at(line, "trailing comma in array");
            }
        }
        return items;
    }
    // Integer.
    std::string text(s);
    std::size_t pos = 0;
    try {
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) fail_at(line, "malformed value '" + text + "'");
        return static_cast<std::int64_t>(v);
    } catch (const std::invalid_argument&) {
        fail_at(line, "malformed value '" + text + "'");
    } catch (const std::out_of_range&) {
        fail_at(line, "integer out of range: '" + text + "'");
    }
}

TomlDocument parse_toml(std::string_view text) {
    TomlDocument doc;
    TomlTable* current = nullptr;
    std::size_t lineno = 0;
    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++lineno;
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail_at(lineno, "unterminated table header");
            const std::string name{trim(line.substr(1, line.size() - 2))};
            if (!is_identifier(name)) fail_at(lineno, "bad table name '" + name + "'");
            for (const auto& [existing, table] : doc)
                if (existing == name) fail_at(lineno, "duplicate table [" + name + "]");
            doc.emplace_back(name, TomlTable{{}, lineno});
            current = &doc.back().second;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail_at(lineno, "expected 'key = value'");
        if (current == nullptr) fail_at(lineno, "key outside of any [table]");
        const std::string key{trim(line.substr(0, eq))};
        if (!is_identifier(key)) fail_at(lineno, "bad key '" + key + "'");
        if (current->find(key) != nullptr) fail_at(lineno, "duplicate key '" + key + "'");
        current->entries.emplace_back(key, TomlEntry{parse_value(line.substr(eq + 1), lineno), lineno});
    }
    return doc;
}

// --- building the spec -----------------------------------------------------

const TomlTable* find_table(const TomlDocument& doc, std::string_view name) {
    for (const auto& [n, t] : doc)
        if (n == name) return &t;
    return nullptr;
}

Polynomial parse_poly_value(const std::string& text, const VarContext& ctx,
                            const std::string& key_path, std::size_t line) {
    try {
        return parse_polynomial(text, ctx);
    } catch (const ParseError& e) {
        throw ProblemFormatError("line " + std::to_string(line) + ": " + key_path + ": " +
                                 e.what());
    }
}

const std::string& expect_string(const TomlEntry& entry, const std::string& key_path) {
    if (const auto* s = std::get_if<std::string>(&entry.value)) return *s;
    fail_at(entry.line, key_path + " must be a quoted string");
}

std::int64_t expect_integer(const TomlEntry& entry, const std::string& key_path) {
    if (const auto* v = std::get_if<std::int64_t>(&entry.value)) return *v;
    fail_at(entry.line, key_path + " must be an integer");
}

const std::vector<std::string>& expect_array(const TomlEntry& entry, const std::string& key_path) {
    if (const auto* a = std::get_if<std::vector<std::string>>(&entry.value)) return *a;
    fail_at(entry.line, key_path + " must be an array of strings");
}

// A table whose keys must be exactly the ring variables, in any order.
std::vector<Polynomial> parse_images(const TomlTable& table, const std::string& name,
                                     const VarContext& ctx) {
    std::vector<std::optional<Polynomial>> images(ctx.size());
    for (const auto& [key, entry] : table.entries) {
        const auto idx = ctx.index_of(key);
        if (!idx) fail_at(entry.line, "[" + name + "] names unknown variable '" + key + "'");
        images[*idx] = parse_poly_value(expect_string(entry, "[" + name + "]." + key), ctx,
                                        "[" + name + "]." + key, entry.line);
    }
    std::vector<Polynomial> out;
    out.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (!images[i])
            fail_at(table.line, "[" + name + "] is missing an image for '" + ctx.name(i) + "'");
        out.push_back(std::move(*images[i]));
    }
    return out;
}

std::vector<Polynomial> parse_poly_list(const TomlTable& table, const std::string& name,
                                        const VarContext& ctx) {
    const TomlEntry* gens = table.find("gens");
    if (gens == nullptr) fail_at(table.line, "[" + name + "] needs a 'gens' array");
    if (table.entries.size() != 1)
        fail_at(table.line, "[" + name + "] supports only the 'gens' key");
    std::vector<Polynomial> out;
    const auto& texts = expect_array(*gens, "[" + name + "].gens");
    out.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i)
        out.push_back(parse_poly_value(texts[i], ctx,
                                       "[" + name + "].gens[" + std::to_string(i) + "]",
                                       gens->line));
    return out;
}

bool is_extra_derivation_table(std::string_view name) {
    if (name.size() <= 10 || name.substr(0, 10) != "derivation") return false;
    for (char c : name.substr(10))
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return name.substr(10) != "0" && name.substr(10) != "1";
}

}  // namespace

std::vector<Derivation> ProblemSpec::derivation_family() const {
    std::vector<Derivation> out;
    out.reserve(1 + extra_derivations.size());
    out.push_back(derivation());
    for (const auto& images : extra_derivations) out.emplace_back(ctx, images);
    return out;
}

AutomorphismPair ProblemSpec::automorphism() const {
    if (!has_automorphism())
        throw Error("problem file supplies no [phi] / [phi_inv] pair");
    return verify_automorphism(Endomorphism(ctx, *phi_images),
                               Endomorphism(ctx, *phi_inverse_images));
}

ProblemSpec parse_problem(std::string_view text) {
    const TomlDocument doc = parse_toml(text);

    static constexpr std::string_view kKnown[] = {"ring",   "derivation", "slice", "action",
                                                  "phi",    "phi_inv",    "kernel", "ideal",
                                                  "bounds"};
    for (const auto& [name, table] : doc) {
        bool known = false;
        for (auto k : kKnown) known = known || name == k;
        if (!known && !is_extra_derivation_table(name))
            fail_at(table.line, "unknown table [" + name + "]");
    }

    const TomlTable* ring = find_table(doc, "ring");
    if (ring == nullptr) throw ProblemFormatError("missing required table [ring]");
    const TomlEntry* vars_entry = ring->find("vars");
    if (vars_entry == nullptr) fail_at(ring->line, "[ring] needs a 'vars' array");
    if (ring->entries.size() != 1) fail_at(ring->line, "[ring] supports only the 'vars' key");
    const auto& var_names = expect_array(*vars_entry, "[ring].vars");
    if (var_names.empty()) fail_at(vars_entry->line, "[ring].vars must not be empty");
    for (std::size_t i = 0; i < var_names.size(); ++i) {
        const auto& v = var_names[i];
        if (!is_identifier(v)) fail_at(vars_entry->line, "bad variable name '" + v + "'");
        if (v == "t" || v == "lam")
            fail_at(vars_entry->line,
                    "'" + v + "' is reserved (action parameter / flow parameter)");
        for (std::size_t j = 0; j < i; ++j)
            if (var_names[j] == v)
                fail_at(vars_entry->line, "variable names must be distinct, '" + v + "' repeats");
    }

    ProblemSpec spec{
        VarContext(var_names), {}, {}, std::nullopt, 1, std::nullopt, std::nullopt, {}, {}, 8, 64};

    const TomlTable* derivation = find_table(doc, "derivation");
    if (derivation == nullptr) throw ProblemFormatError("missing required table [derivation]");
    spec.derivation_images = parse_images(*derivation, "derivation", spec.ctx);

    for (const auto& [name, table] : doc)
        if (is_extra_derivation_table(name))
            spec.extra_derivations.push_back(parse_images(table, name, spec.ctx));

    if (const TomlTable* slice = find_table(doc, "slice")) {
        const TomlEntry* s = slice->find("s");
        if (s == nullptr) fail_at(slice->line, "[slice] needs the key 's'");
        if (slice->entries.size() != 1) fail_at(slice->line, "[slice] supports only the 's' key");
        spec.slice = parse_poly_value(expect_string(*s, "[slice].s"), spec.ctx, "[slice].s",
                                      s->line);
    }

    if (const TomlTable* action = find_table(doc, "action")) {
        const TomlEntry* n = action->find("N");
        if (n == nullptr) fail_at(action->line, "[action] needs the key 'N'");
        if (action->entries.size() != 1) fail_at(action->line, "[action] supports only 'N'");
        spec.weight = expect_integer(*n, "[action].N");
        if (spec.weight == 0) fail_at(n->line, "[action].N must be nonzero");
    }

    if (const TomlTable* phi = find_table(doc, "phi"))
        spec.phi_images = parse_images(*phi, "phi", spec.ctx);
    if (const TomlTable* phi_inv = find_table(doc, "phi_inv"))
        spec.phi_inverse_images = parse_images(*phi_inv, "phi_inv", spec.ctx);
    if (spec.phi_images.has_value() != spec.phi_inverse_images.has_value())
        throw ProblemFormatError("[phi] and [phi_inv] must be supplied together");

    if (const TomlTable* kernel = find_table(doc, "kernel"))
        spec.kernel_generators = parse_poly_list(*kernel, "kernel", spec.ctx);
    if (const TomlTable* ideal = find_table(doc, "ideal"))
        spec.ideal_generators = parse_poly_list(*ideal, "ideal", spec.ctx);

    if (const TomlTable* bounds = find_table(doc, "bounds")) {
        for (const auto& [key, entry] : bounds->entries) {
            const std::int64_t v = expect_integer(entry, "[bounds]." + key);
            if (v < 1) fail_at(entry.line, "[bounds]." + key + " must be at least 1");
            if (key == "degree")
                spec.degree_bound = static_cast<unsigned>(v);
            else if (key == "nilpotency")
                spec.nilpotency_bound = static_cast<unsigned>(v);
            else
                fail_at(entry.line, "[bounds] supports 'degree' and 'nilpotency' only");
        }
    }

    return spec;
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemFormatError("cannot open problem file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

}  // namespace slicekit
