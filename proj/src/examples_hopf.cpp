#include "hopfyd/examples.hpp"

#include <algorithm>
#include <array>

namespace hopfyd {

int GroupTable::identity() const {
    int n = order();
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (table[e][i] != i || table[i][e] != i) ok = false;
        if (ok) return e;
    }
    throw std::invalid_argument("group '" + name + "': no identity element");
}

int GroupTable::inverse(int i) const {
    int e = identity();
    for (int j = 0; j < order(); ++j)
        if (table[i][j] == e && table[j][i] == e) return j;
    throw std::invalid_argument("group '" + name + "': element " + std::to_string(i) +
                                " has no inverse");
}

void GroupTable::validate() const {
    int n = order();
    if (static_cast<int>(table.size()) != n)
        throw std::invalid_argument("group '" + name + "': table size mismatch");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group '" + name + "': table row size mismatch");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("group '" + name + "': table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw std::invalid_argument("group '" + name + "': not associative at (" +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                "," + std::to_string(k) + ")");
    identity();
    for (int i = 0; i < n; ++i) inverse(i);
}

namespace {

GroupTable cyclicGroup(int n) {
    GroupTable g;
    g.name = "C" + std::to_string(n);
    for (int i = 0; i < n; ++i) g.labels.push_back("g" + std::to_string(i));
    g.table.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    return g;
}

GroupTable kleinFour() {
    GroupTable g;
    g.name = "V4";
    g.labels = {"e", "a", "b", "ab"};
    // XOR on {0,1,2,3} realizes C2 x C2.
    g.table.assign(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.table[i][j] = i ^ j;
    return g;
}

GroupTable symmetricThree() {
    // Permutations of {0,1,2} in lexicographic one-line order; composition
    // (fg)(x) = f(g(x)).
    std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                {0, 2, 1},
                                                {1, 0, 2},
                                                {1, 2, 0},
                                                {2, 0, 1},
                                                {2, 1, 0}}};
    GroupTable g;
    g.name = "S3";
    for (const auto& p : perms) {
        std::string l = "p";
        for (int v : p) l += std::to_string(v);
        g.labels.push_back(l);
    }
    g.table.assign(6, std::vector<int>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            g.table[i][j] =
                static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
        }
    return g;
}

}  // namespace

GroupTable builtinGroup(const std::string& name) {
    if (name == "C2") return cyclicGroup(2);
    if (name == "C3") return cyclicGroup(3);
    if (name == "C4") return cyclicGroup(4);
    if (name == "V4") return kleinFour();
    if (name == "S3") return symmetricThree();
    throw std::invalid_argument("unknown group '" + name + "'");
}

HopfAlgebraData groupAlgebra(const GroupTable& g, long p) {
    g.validate();
    int n = g.order();
    SpacePtr v = Space::make("k" + g.name, g.labels);
    LegList one{v}, two{v, v};
    Scalar oneS = Scalar::one(p);

    StructureMap mult(two, one, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult.addEntry({g.table[i][j]}, {i, j}, oneS);

    TensorElement unit = TensorElement::basis(one, {g.identity()}, p);

    StructureMap comult(one, two, p);
    StructureMap counit(one, {}, p);
    StructureMap antipode(one, one, p);
    for (int i = 0; i < n; ++i) {
        comult.addEntry({i, i}, {i}, oneS);
        counit.addEntry({}, {i}, oneS);
        antipode.addEntry({g.inverse(i)}, {i}, oneS);
    }
    return HopfAlgebraData::make(AlgebraData(v, std::move(mult), std::move(unit)),
                                 std::move(comult), std::move(counit), std::move(antipode));
}

HopfAlgebraData functionAlgebra(const GroupTable& g, long p) {
    return groupAlgebra(g, p).dual();
}

HopfAlgebraData sweedlerH4(long p) {
    if (p == 2)
        throw BadCharacteristic("sweedler4 degenerates in characteristic 2");
    SpacePtr v = Space::make("H4", {"1", "g", "x", "gx"});
    LegList one{v}, two{v, v};
    long P = p;
    auto c = [P](long n) { return Scalar::integer(n, P); };

    // Basis order 1, g, x, gx.  Products: g*g=1, x*x=0, g*x=gx, x*g=-gx,
    // gx*g=-x, g*gx=x, x*gx=0, gx*x=0, gx*gx=0.
    StructureMap mult(two, one, p);
    auto put = [&](int i, int j, int k, long s) {
        if (s != 0) mult.addEntry({k}, {i, j}, c(s));
    };
    // Row = left factor index, column = right factor index.
    put(0, 0, 0, 1); put(0, 1, 1, 1); put(0, 2, 2, 1); put(0, 3, 3, 1);
    put(1, 0, 1, 1); put(1, 1, 0, 1); put(1, 2, 3, 1); put(1, 3, 2, 1);
    put(2, 0, 2, 1); put(2, 1, 3, -1); /* x*x = 0 */      /* x*gx = 0 */
    put(3, 0, 3, 1); put(3, 1, 2, -1); /* gx*x = 0 */     /* gx*gx = 0 */

    TensorElement unit = TensorElement::basis(one, {0}, p);

    StructureMap comult(one, two, p);
    // Δ(1)=1⊗1, Δ(g)=g⊗g, Δ(x)=x⊗1+g⊗x, Δ(gx)=gx⊗g+1⊗gx.
    comult.addEntry({0, 0}, {0}, c(1));
    comult.addEntry({1, 1}, {1}, c(1));
    comult.addEntry({2, 0}, {2}, c(1));
    comult.addEntry({1, 2}, {2}, c(1));
    comult.addEntry({3, 1}, {3}, c(1));
    comult.addEntry({0, 3}, {3}, c(1));

    StructureMap counit(one, {}, p);
    counit.addEntry({}, {0}, c(1));
    counit.addEntry({}, {1}, c(1));

    // S(1)=1, S(g)=g, S(x)=-gx, S(gx)=S(x)S(g)=(-gx)g=x.
    StructureMap antipode(one, one, p);
    antipode.addEntry({0}, {0}, c(1));
    antipode.addEntry({1}, {1}, c(1));
    antipode.addEntry({3}, {2}, c(-1));
    antipode.addEntry({2}, {3}, c(1));

    return HopfAlgebraData::make(AlgebraData(v, std::move(mult), std::move(unit)),
                                 std::move(comult), std::move(counit), std::move(antipode));
}

HopfAlgebraData trivialHopfAlgebra(long p) {
    auto s = Space::make("k1", {"1"});
    StructureMap mult({s, s}, {s}, p);
    mult.addEntry({0}, {0, 0}, Scalar::one(p));
    TensorElement unit = TensorElement::basis({s}, {0}, p);
    StructureMap comult({s}, {s, s}, p);
    comult.addEntry({0, 0}, {0}, Scalar::one(p));
    StructureMap counit({s}, {}, p);
    counit.addEntry({}, {0}, Scalar::one(p));
    return HopfAlgebraData::make(AlgebraData(s, std::move(mult), std::move(unit)),
                                 std::move(comult), std::move(counit),
                                 StructureMap::identity({s}, p));
}

HopfAlgebraData hopfFixture(const std::string& name, long p) {
    if (name == "sweedler4") return sweedlerH4(p);
    if (name.rfind("group:", 0) == 0) return groupAlgebra(builtinGroup(name.substr(6)), p);
    if (name.rfind("fn:", 0) == 0) return functionAlgebra(builtinGroup(name.substr(3)), p);
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> hopfFixtureNames() {
    return {"group:C2", "group:C3", "group:C4", "group:V4", "group:S3",
            "fn:C2",    "fn:C3",    "fn:C4",    "fn:V4",    "fn:S3",
            "sweedler4"};
}

}  // namespace hopfyd
