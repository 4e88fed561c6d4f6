#include "slicekit/corpus.hpp"

#include "slicekit/linearize.hpp"
#include "slicekit/parse.hpp"

namespace slicekit {

namespace {

struct PolyReader {
    const VarContext& ctx;
    Polynomial operator()(std::string_view text) const { return parse_polynomial(text, ctx); }
};

std::vector<Polynomial> parse_all(const VarContext& ctx, std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto* t : texts) out.push_back(parse_polynomial(t, ctx));
    return out;
}

CorpusEntry ring_entry(std::string name, std::string description, const VarContext& ctx,
                       std::initializer_list<const char*> derivation, const char* slice,
                       std::int64_t weight, std::initializer_list<const char*> phi,
                       std::initializer_list<const char*> phi_inv,
                       std::initializer_list<const char*> kernel) {
    PolyReader read{ctx};
    ProblemSpec spec{ctx,
                     parse_all(ctx, derivation),
                     {},
                     read(slice),
                     weight,
                     parse_all(ctx, phi),
                     parse_all(ctx, phi_inv),
                     parse_all(ctx, kernel),
                     {},
                     8,
                     64};
    return {std::move(name), std::move(description), std::move(spec), false, {}};
}

// Entry for D = f(x) d/dy + g(x) d/dz built from the verified normal-form
// data; the conjugator comes from the Euclidean cofactors:
//   phi(y) = v*y + f*z,  phi(z) = -u*y + g*z
// is unimodular with inverse  y -> g*y - f*z,  z -> u*y + v*z,  and maps the
// slice u*y + v*z to z while conjugating D to d/dz.
CorpusEntry wang_entry(std::string name, const char* f_text, const char* g_text,
                       std::int64_t weight) {
    const VarContext ctx({"x", "y", "z"});
    PolyReader read{ctx};
    const WangData data = wang_normal_form(read(f_text), read(g_text));

    const Polynomial x = Polynomial::variable(ctx, 0);
    const Polynomial y = Polynomial::variable(ctx, 1);
    const Polynomial z = Polynomial::variable(ctx, 2);
    std::vector<Polynomial> phi{x, data.v * y + data.f * z, -data.u * y + data.g * z};
    std::vector<Polynomial> phi_inv{x, data.g * y - data.f * z, data.u * y + data.v * z};

    ProblemSpec spec{ctx,
                     data.derivation.images(),
                     {},
                     data.slice,
                     weight,
                     std::move(phi),
                     std::move(phi_inv),
                     {data.kernel_generators[0], data.kernel_generators[1]},
                     {},
                     8,
                     64};
    return {std::move(name),
            "rank-one derivation (" + format_polynomial(data.f) + ")*d/dy + (" +
                format_polynomial(data.g) + ")*d/dz with Euclidean slice",
            std::move(spec),
            false,
            {}};
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;

    {
        const VarContext ctx({"x"});
        entries.push_back(ring_entry("dim1_translation", "translation flow d/dx on Q[x]", ctx,
                                     {"1"}, "x", 2, {"x"}, {"x"}, {"1"}));
    }
    {
        const VarContext ctx({"x", "y"});
        entries.push_back(ring_entry("dim2_coordinate", "coordinate derivation d/dy on Q[x,y]",
                                     ctx, {"0", "1"}, "y", 1, {"x", "y"}, {"x", "y"}, {"x"}));
        entries.push_back(ring_entry("dim2_offset_slice",
                                     "d/dy with the offset slice y + x^2 on Q[x,y]", ctx,
                                     {"0", "1"}, "y + x^2", 3, {"x", "y"}, {"x", "y"}, {"x"}));
        entries.push_back(ring_entry("dim2_affine",
                                     "constant derivation 2*d/dx + 3*d/dy with fractional slice",
                                     ctx, {"2", "3"}, "1/2*x", -1, {"2*y", "3*y - 1/2*x"},
                                     {"3*x - 2*y", "1/2*x"}, {"3*x - 2*y"}));
    }

    entries.push_back(wang_entry("wang_unit", "1", "0", 1));
    entries.push_back(wang_entry("wang_x_1", "x", "1", 2));
    entries.push_back(wang_entry("wang_x2_1", "x^2", "1", 3));
    entries.push_back(wang_entry("wang_x_1px", "x", "1 + x", -2));

    {
        const VarContext ctx({"x", "y", "z"});
        ProblemSpec spec{ctx,
                         parse_all(ctx, {"0", "x^2", "2*y"}),
                         {},
                         std::nullopt,
                         1,
                         std::nullopt,
                         std::nullopt,
                         {},
                         parse_all(ctx, {"x^2*z - y^2"}),
                         4,
                         64};
        CorpusEntry entry{"danielewski_quotient",
                          "derivation descending to Q[x,y,z]/(x^2*z - y^2)",
                          std::move(spec),
                          true,
                          parse_all(ctx, {"1", "0", "0"})};
        entries.push_back(std::move(entry));
    }

    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

}  // namespace slicekit
