/// @file serialize.hpp
/// @brief Line-oriented text files for Hopf algebras, plain algebras, and
///        Yetter–Drinfeld instances.
///
/// The on-disk format is a strict, versioned, line-oriented text format whose
/// scalars are exact strings ("a" or "a/b"), never floats.  Emission is
/// deterministic: entries are written in lexicographic multi-index order, so
/// identical structures produce byte-identical files and parse ∘ emit is the
/// identity.  A Hopf file records the basis together with the sparse
/// multiplication and comultiplication tensors, the unit and counit
/// coefficient lists, and the antipode as a dense scalar grid.  A
/// Yetter–Drinfeld file embeds a full Hopf block, a carrier-algebra block,
/// and the two structure maps of either characterization as sparse entry
/// lists; shapes are dictated by the declared variant, so entries need no leg
/// metadata.  Parsing validates every index range and reports the first
/// offending line.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hopfyd/yd.hpp"

namespace hopfyd {

/// Thrown on malformed input; `line` is the 1-based offending line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int atLine)
        : std::runtime_error("line " + std::to_string(atLine) + ": " + what),
          line(atLine) {}
};

/// A parsed Hopf file: display name plus the structure itself.
struct NamedHopf {
    std::string name;
    HopfAlgebraData hopf;
};

/// A parsed algebra file.
struct NamedAlgebra {
    std::string name;
    AlgebraData algebra;
};

/// A parsed Yetter–Drinfeld file; exactly one of the two instances is set.
struct ParsedYd {
    std::string hopfName;
    std::string carrierName;
    std::optional<StandardYd> standard;
    std::optional<CoactionYd> coaction;
};

/// Serialize a Hopf algebra under the given display name.
std::string emitHopf(const HopfAlgebraData& h, const std::string& name);

/// Parse a Hopf file; throws ParseError.
NamedHopf parseHopf(const std::string& text);

/// Serialize a plain (unital associative) algebra.
std::string emitAlgebra(const AlgebraData& a, const std::string& name);

/// Parse an algebra file; throws ParseError.
NamedAlgebra parseAlgebra(const std::string& text);

/// Serialize a standard-characterization instance.  The embedded Hopf block
/// uses `hopfName`; the carrier block uses the carrier space's name.
std::string emitYd(const StandardYd& s, const std::string& hopfName);

/// Serialize an only-coaction instance over its pairing's left Hopf algebra.
std::string emitYd(const CoactionYd& c, const std::string& hopfName);

/// Parse a Yetter–Drinfeld file; only-coaction instances are rebuilt over the
/// canonical pairing of the embedded Hopf algebra.  Throws ParseError.
ParsedYd parseYd(const std::string& text);

}  // namespace hopfyd
