/// @file serialize.cpp
/// @brief Emission and parsing of the line-oriented structure-constant files.

#include "hopfyd/serialize.hpp"

#include <sstream>
#include <vector>

#include "hopfyd/pairing.hpp"

namespace hopfyd {

namespace {

// ---------------------------------------------------------------------------
// Emission helpers
// ---------------------------------------------------------------------------

std::string fieldTag(long p) { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }

void emitIndices(std::ostringstream& os, const MultiIndex& idx) {
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
}

/// One line per nonzero entry, "domIdx... -> codIdx... scalar", in
/// lexicographic (dom, cod) order.
void emitMapBlock(std::ostringstream& os, const std::string& keyword,
                  const StructureMap& m) {
    os << keyword << "\n";
    for (const auto& [dom, col] : m.columns())
        for (const auto& [cod, s] : col) {
            emitIndices(os, dom);
            os << " ->";
            for (int j : cod) os << " " << j;
            os << " " << s.str() << "\n";
        }
    os << "end\n";
}

/// Coefficient list "index scalar" of a single-leg element.
void emitElementBlock(std::ostringstream& os, const std::string& keyword,
                      const TensorElement& v) {
    os << keyword << "\n";
    for (const auto& [idx, s] : v.coeffs()) os << idx[0] << " " << s.str() << "\n";
    os << "end\n";
}

void emitBasisLine(std::ostringstream& os, const SpacePtr& s) {
    os << "basis";
    for (const auto& l : s->basisLabels) os << " " << l;
    os << "\n";
}

void emitAlgebraBody(std::ostringstream& os, const AlgebraData& a,
                     const std::string& name) {
    os << "name " << name << "\n";
    os << "field " << fieldTag(a.field()) << "\n";
    os << "dim " << a.space->dim() << "\n";
    emitBasisLine(os, a.space);
    emitMapBlock(os, "mult", a.mult);
    emitElementBlock(os, "unit", a.unit);
}

void emitHopfBody(std::ostringstream& os, const HopfAlgebraData& h,
                  const std::string& name) {
    emitAlgebraBody(os, h.algebra(), name);
    emitMapBlock(os, "comult", h.comult());
    emitMapBlock(os, "counit", h.counit());
    os << "antipode\n";
    int n = h.space()->dim();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            os << (c ? " " : "") << h.antipode().entry({r}, {c}).str();
        os << "\n";
    }
    os << "end\n";
}

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

/// Line cursor with 1-based positions for error reporting.
struct Lines {
    std::vector<std::string> text;
    size_t pos = 0;

    explicit Lines(const std::string& whole) {
        std::istringstream is(whole);
        std::string line;
        while (std::getline(is, line)) text.push_back(line);
    }

    int lineNo() const { return static_cast<int>(pos); }  // pos is 1 past last read
    bool done() const { return pos >= text.size(); }
    const std::string& next(const std::string& expectedWhat) {
        while (pos < text.size() && text[pos].empty()) ++pos;
        if (pos >= text.size())
            throw ParseError("unexpected end of file, expected " + expectedWhat,
                             static_cast<int>(text.size()) + 1);
        return text[pos++];
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> t;
    std::string w;
    while (is >> w) t.push_back(w);
    return t;
}

/// Reads "keyword rest-of-line" and returns the rest; the keyword must match.
std::string keywordLine(Lines& in, const std::string& keyword) {
    const std::string& line = in.next("'" + keyword + "'");
    auto t = tokens(line);
    if (t.empty() || t[0] != keyword)
        throw ParseError("expected '" + keyword + "', got '" + line + "'", in.lineNo());
    std::string rest;
    for (size_t i = 1; i < t.size(); ++i) rest += (i > 1 ? " " : "") + t[i];
    return rest;
}

long parseField(const std::string& tag, int atLine) {
    if (tag == "Q") return 0;
    if (tag.rfind("Fp:", 0) == 0) {
        try {
            long p = std::stol(tag.substr(3));
            if (p > 1) return p;
        } catch (const std::exception&) {
        }
    }
    throw ParseError("bad field tag '" + tag + "' (want Q or Fp:<prime>)", atLine);
}

int parseIndex(const std::string& tok, int dim, int atLine) {
    int v;
    try {
        size_t used;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw ParseError("bad basis index '" + tok + "'", atLine);
    }
    if (v < 0 || v >= dim)
        throw ParseError("basis index " + tok + " out of range [0, " +
                             std::to_string(dim) + ")",
                         atLine);
    return v;
}

Scalar parseScalar(const std::string& tok, long p, int atLine) {
    try {
        return Scalar::parse(tok, p);
    } catch (const std::exception&) {
        throw ParseError("bad scalar '" + tok + "' (want \"a\" or \"a/b\")", atLine);
    }
}

/// Parses an entry block "dom... -> cod... scalar" into the given shape.
StructureMap parseMapBlock(Lines& in, const std::string& keyword, const LegList& dom,
                           const LegList& cod, long p) {
    keywordLine(in, keyword);
    StructureMap m(dom, cod, p);
    for (;;) {
        auto t = tokens(in.next("entry or 'end' in '" + keyword + "'"));
        if (t.size() == 1 && t[0] == "end") return m;
        if (t.size() != dom.size() + cod.size() + 2 || t[dom.size()] != "->")
            throw ParseError("malformed '" + keyword + "' entry (want " +
                                 std::to_string(dom.size()) + " indices, '->', " +
                                 std::to_string(cod.size()) + " indices, scalar)",
                             in.lineNo());
        MultiIndex d, c;
        for (size_t i = 0; i < dom.size(); ++i)
            d.push_back(parseIndex(t[i], dom[i]->dim(), in.lineNo()));
        for (size_t i = 0; i < cod.size(); ++i)
            c.push_back(parseIndex(t[dom.size() + 1 + i], cod[i]->dim(), in.lineNo()));
        m.addEntry(c, d, parseScalar(t.back(), p, in.lineNo()));
    }
}

TensorElement parseElementBlock(Lines& in, const std::string& keyword,
                                const SpacePtr& s, long p) {
    keywordLine(in, keyword);
    TensorElement v({s}, p);
    for (;;) {
        auto t = tokens(in.next("entry or 'end' in '" + keyword + "'"));
        if (t.size() == 1 && t[0] == "end") return v;
        if (t.size() != 2)
            throw ParseError("malformed '" + keyword + "' entry (want index scalar)",
                             in.lineNo());
        v.addTerm({parseIndex(t[0], s->dim(), in.lineNo())},
                  parseScalar(t[1], p, in.lineNo()));
    }
}

struct AlgebraBody {
    std::string name;
    long p;
    SpacePtr space;
    StructureMap mult;
    TensorElement unit;
};

AlgebraBody parseAlgebraBody(Lines& in) {
    std::string name = keywordLine(in, "name");
    long p = parseField(keywordLine(in, "field"), in.lineNo());
    int dim;
    try {
        dim = std::stoi(keywordLine(in, "dim"));
    } catch (const std::exception&) {
        throw ParseError("bad dimension", in.lineNo());
    }
    if (dim <= 0) throw ParseError("dimension must be positive", in.lineNo());
    auto labels = tokens(keywordLine(in, "basis"));
    if (static_cast<int>(labels.size()) != dim)
        throw ParseError("basis has " + std::to_string(labels.size()) +
                             " labels, dim says " + std::to_string(dim),
                         in.lineNo());
    SpacePtr s = Space::make(name, labels);
    StructureMap mult = parseMapBlock(in, "mult", {s, s}, {s}, p);
    TensorElement unit = parseElementBlock(in, "unit", s, p);
    return {name, p, s, std::move(mult), std::move(unit)};
}

HopfAlgebraData parseHopfBody(Lines& in, std::string& nameOut) {
    AlgebraBody a = parseAlgebraBody(in);
    nameOut = a.name;
    StructureMap comult = parseMapBlock(in, "comult", {a.space}, {a.space, a.space}, a.p);
    StructureMap counit = parseMapBlock(in, "counit", {a.space}, {}, a.p);
    keywordLine(in, "antipode");
    StructureMap antipode({a.space}, {a.space}, a.p);
    int n = a.space->dim();
    for (int r = 0; r < n; ++r) {
        auto t = tokens(in.next("antipode grid row"));
        if (static_cast<int>(t.size()) != n)
            throw ParseError("antipode row has " + std::to_string(t.size()) +
                                 " entries, want " + std::to_string(n),
                             in.lineNo());
        for (int c = 0; c < n; ++c)
            antipode.addEntry({r}, {c}, parseScalar(t[c], a.p, in.lineNo()));
    }
    auto endTok = tokens(in.next("'end' after antipode grid"));
    if (endTok.size() != 1 || endTok[0] != "end")
        throw ParseError("expected 'end' after antipode grid", in.lineNo());
    return HopfAlgebraData::make(AlgebraData(a.space, std::move(a.mult), std::move(a.unit)),
                                 std::move(comult), std::move(counit),
                                 std::move(antipode));
}

void requireVersion(Lines& in, const std::string& magic) {
    auto t = tokens(in.next("header '" + magic + " 1'"));
    if (t.size() != 2 || t[0] != magic || t[1] != "1")
        throw ParseError("expected header '" + magic + " 1'", in.lineNo());
}

void requireEof(Lines& in) {
    while (!in.done()) {
        if (!tokens(in.text[in.pos]).empty())
            throw ParseError("trailing content '" + in.text[in.pos] + "'",
                             static_cast<int>(in.pos) + 1);
        ++in.pos;
    }
}

/// Shapes of the two structure maps of a standard instance.
void standardShapes(YdVariant v, const SpacePtr& h, const SpacePtr& x, LegList& actDom,
                    LegList& coCod) {
    bool leftAction = (v == YdVariant::LL || v == YdVariant::LR);
    bool leftCoaction = (v == YdVariant::LL || v == YdVariant::RL);
    actDom = leftAction ? LegList{h, x} : LegList{x, h};
    coCod = leftCoaction ? LegList{h, x} : LegList{x, h};
}

/// Shapes of α and β of an only-coaction instance.
void coactionShapes(YdVariant v, const SpacePtr& h, const SpacePtr& hd,
                    const SpacePtr& x, LegList& alphaCod, LegList& betaCod) {
    bool alphaLeft = (v == YdVariant::LL || v == YdVariant::LR);
    bool betaLeft = (v == YdVariant::LL || v == YdVariant::RL);
    alphaCod = alphaLeft ? LegList{h, x} : LegList{x, h};
    betaCod = betaLeft ? LegList{hd, x} : LegList{x, hd};
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface
// ---------------------------------------------------------------------------

std::string emitHopf(const HopfAlgebraData& h, const std::string& name) {
    std::ostringstream os;
    os << "hopf-file 1\n";
    emitHopfBody(os, h, name);
    return os.str();
}

NamedHopf parseHopf(const std::string& text) {
    Lines in(text);
    requireVersion(in, "hopf-file");
    std::string name;
    HopfAlgebraData h = parseHopfBody(in, name);
    requireEof(in);
    return {name, std::move(h)};
}

std::string emitAlgebra(const AlgebraData& a, const std::string& name) {
    std::ostringstream os;
    os << "algebra-file 1\n";
    emitAlgebraBody(os, a, name);
    return os.str();
}

NamedAlgebra parseAlgebra(const std::string& text) {
    Lines in(text);
    requireVersion(in, "algebra-file");
    AlgebraBody a = parseAlgebraBody(in);
    requireEof(in);
    return {a.name, AlgebraData(a.space, std::move(a.mult), std::move(a.unit))};
}

std::string emitYd(const StandardYd& s, const std::string& hopfName) {
    std::ostringstream os;
    os << "yd-file 1\n";
    os << "characterization standard\n";
    os << "variant " << variantTag(s.variant) << "\n";
    os << "hopf\n";
    emitHopfBody(os, s.hopf, hopfName);
    os << "end-hopf\n";
    os << "carrier\n";
    emitAlgebraBody(os, s.carrier, s.carrier.space->name);
    os << "end-carrier\n";
    emitMapBlock(os, "action", s.action);
    emitMapBlock(os, "coaction", s.coaction);
    return os.str();
}

std::string emitYd(const CoactionYd& c, const std::string& hopfName) {
    std::ostringstream os;
    os << "yd-file 1\n";
    os << "characterization coaction\n";
    os << "variant " << variantTag(c.variant) << "\n";
    os << "hopf\n";
    emitHopfBody(os, c.pairing.left, hopfName);
    os << "end-hopf\n";
    os << "carrier\n";
    emitAlgebraBody(os, c.carrier, c.carrier.space->name);
    os << "end-carrier\n";
    emitMapBlock(os, "alpha", c.alpha);
    emitMapBlock(os, "beta", c.beta);
    return os.str();
}

ParsedYd parseYd(const std::string& text) {
    Lines in(text);
    requireVersion(in, "yd-file");
    std::string charName = keywordLine(in, "characterization");
    if (charName != "standard" && charName != "coaction")
        throw ParseError("characterization must be 'standard' or 'coaction'",
                         in.lineNo());
    YdVariant variant;
    try {
        variant = variantFromTag(keywordLine(in, "variant"));
    } catch (const std::exception&) {
        throw ParseError("variant must be one of ll, lr, rr, rl", in.lineNo());
    }
    keywordLine(in, "hopf");
    ParsedYd out;
    HopfAlgebraData h = parseHopfBody(in, out.hopfName);
    keywordLine(in, "end-hopf");
    keywordLine(in, "carrier");
    AlgebraBody carrier = parseAlgebraBody(in);
    keywordLine(in, "end-carrier");
    if (carrier.p != h.field())
        throw ParseError("carrier field differs from Hopf field", in.lineNo());
    out.carrierName = carrier.name;
    AlgebraData x(carrier.space, std::move(carrier.mult), std::move(carrier.unit));
    LegList xLeg{x.space};
    if (charName == "standard") {
        LegList actDom, coCod;
        standardShapes(variant, h.space(), x.space, actDom, coCod);
        StructureMap action = parseMapBlock(in, "action", actDom, xLeg, h.field());
        StructureMap coaction = parseMapBlock(in, "coaction", xLeg, coCod, h.field());
        out.standard = StandardYd{variant, std::move(h), std::move(x),
                                  std::move(action), std::move(coaction)};
    } else {
        Pairing p = canonicalPairing(h);
        LegList alphaCod, betaCod;
        coactionShapes(variant, p.left.space(), p.right.space(), x.space, alphaCod,
                       betaCod);
        StructureMap alpha = parseMapBlock(in, "alpha", xLeg, alphaCod, h.field());
        StructureMap beta = parseMapBlock(in, "beta", xLeg, betaCod, h.field());
        out.coaction = CoactionYd{variant, std::move(p), std::move(x),
                                  std::move(alpha), std::move(beta)};
    }
    requireEof(in);
    return out;
}

}  // namespace hopfyd
