#pragma once

#include <string>
#include <vector>

namespace heis {

// '+' is an upward strand endpoint, '-' a downward one; read left to right
using SignSeq = std::string;

enum class Tok {
    ID_UP,
    ID_DOWN,
    DOT_UP,
    DOT_DOWN,
    CROSS_UU,
    CROSS_DD,
    CROSS_DU, // (+,-) -> (-,+)
    CROSS_UD, // (-,+) -> (+,-)
    CAP_CW,   // (+,-) -> ()
    CUP_CCW,  // () -> (-,+)
    CAP_CCW,  // (-,+) -> ()
    CUP_CW,   // () -> (+,-)
};

struct Token {
    Tok kind;
    int dots = 1; // DOT_* only

    SignSeq dom() const;
    SignSeq cod() const;
    std::string str() const;
    bool operator==(const Token&) const = default;
};

using Slice = std::vector<Token>;

struct SliceWord {
    std::vector<Slice> slices; // bottom to top
    SignSeq dom;
    SignSeq cod;

    std::string str() const;
    bool operator==(const SliceWord&) const = default;
};

SignSeq slice_dom(const Slice& s);
SignSeq slice_cod(const Slice& s);

// "XUU ; PU^2 * U ; ..." -- throws input_error with a position or slice index
SliceWord parse_slice_word(const std::string& text);

// stack b on top of a
SliceWord stack(const SliceWord& a, const SliceWord& b);
SliceWord juxtapose(const SliceWord& a, const SliceWord& b);
SliceWord identity_word(const SignSeq& s);

} // namespace heis
