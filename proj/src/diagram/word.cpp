#include "heis/word.hpp"

#include "heis/errors.hpp"

#include <cctype>
#include <map>

namespace heis {

SignSeq Token::dom() const
{
    switch (kind) {
    case Tok::ID_UP:
    case Tok::DOT_UP: return "+";
    case Tok::ID_DOWN:
    case Tok::DOT_DOWN: return "-";
    case Tok::CROSS_UU: return "++";
    case Tok::CROSS_DD: return "--";
    case Tok::CROSS_DU: return "+-";
    case Tok::CROSS_UD: return "-+";
    case Tok::CAP_CW: return "+-";
    case Tok::CAP_CCW: return "-+";
    case Tok::CUP_CCW:
    case Tok::CUP_CW: return "";
    }
    return "";
}

SignSeq Token::cod() const
{
    switch (kind) {
    case Tok::ID_UP:
    case Tok::DOT_UP: return "+";
    case Tok::ID_DOWN:
    case Tok::DOT_DOWN: return "-";
    case Tok::CROSS_UU: return "++";
    case Tok::CROSS_DD: return "--";
    case Tok::CROSS_DU: return "-+";
    case Tok::CROSS_UD: return "+-";
    case Tok::CAP_CW:
    case Tok::CAP_CCW: return "";
    case Tok::CUP_CCW: return "-+";
    case Tok::CUP_CW: return "+-";
    }
    return "";
}

std::string Token::str() const
{
    switch (kind) {
    case Tok::ID_UP: return "U";
    case Tok::ID_DOWN: return "D";
    case Tok::DOT_UP: return dots == 1 ? "PU" : "PU^" + std::to_string(dots);
    case Tok::DOT_DOWN: return dots == 1 ? "PD" : "PD^" + std::to_string(dots);
    case Tok::CROSS_UU: return "XUU";
    case Tok::CROSS_DD: return "XDD";
    case Tok::CROSS_DU: return "XDU";
    case Tok::CROSS_UD: return "XUD";
    case Tok::CAP_CW: return "CAPCW";
    case Tok::CUP_CCW: return "CUPCCW";
    case Tok::CAP_CCW: return "CAPCCW";
    case Tok::CUP_CW: return "CUPCW";
    }
    return "?";
}

SignSeq slice_dom(const Slice& s)
{
    SignSeq r;
    for (const auto& t : s)
        r += t.dom();
    return r;
}

SignSeq slice_cod(const Slice& s)
{
    SignSeq r;
    for (const auto& t : s)
        r += t.cod();
    return r;
}

std::string SliceWord::str() const
{
    std::string out;
    for (size_t i = 0; i < slices.size(); ++i) {
        if (i)
            out += " ; ";
        for (size_t j = 0; j < slices[i].size(); ++j) {
            if (j)
                out += " * ";
            out += slices[i][j].str();
        }
    }
    return out;
}

namespace {

const std::map<std::string, Tok>& token_table()
{
    static const std::map<std::string, Tok> t{
        {"U", Tok::ID_UP},         {"D", Tok::ID_DOWN},       {"PU", Tok::DOT_UP},
        {"PD", Tok::DOT_DOWN},     {"XUU", Tok::CROSS_UU},    {"XDD", Tok::CROSS_DD},
        {"XDU", Tok::CROSS_DU},    {"XUD", Tok::CROSS_UD},    {"CAPCW", Tok::CAP_CW},
        {"CUPCCW", Tok::CUP_CCW},  {"CAPCCW", Tok::CAP_CCW},  {"CUPCW", Tok::CUP_CW},
    };
    return t;
}

} // namespace

SliceWord parse_slice_word(const std::string& text)
{
    SliceWord w;
    Slice cur;
    bool expect_token = true, slice_has_token = false;
    size_t i = 0;
    auto finish_slice = [&](size_t at) {
        if (expect_token && slice_has_token)
            throw input_error("diagram word: expected token at position " + std::to_string(at));
        w.slices.push_back(std::move(cur));
        cur.clear();
        expect_token = true;
        slice_has_token = false;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == ';') {
            finish_slice(i);
            ++i;
        } else if (c == '*') {
            if (expect_token)
                throw input_error("diagram word: unexpected '*' at position " + std::to_string(i));
            expect_token = true;
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!expect_token)
                throw input_error("diagram word: missing '*' before position " + std::to_string(i));
            size_t start = i;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
                ++i;
            std::string name = text.substr(start, i - start);
            auto it = token_table().find(name);
            if (it == token_table().end())
                throw input_error("diagram word: unknown token '" + name + "' at position " +
                                  std::to_string(start));
            Token t{it->second, 1};
            if (i < text.size() && text[i] == '^') {
                if (t.kind != Tok::DOT_UP && t.kind != Tok::DOT_DOWN)
                    throw input_error("diagram word: exponent on a non-dot token at position " +
                                      std::to_string(i));
                ++i;
                size_t ds = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
                if (ds == i)
                    throw input_error("diagram word: expected dot count at position " + std::to_string(ds));
                t.dots = std::stoi(text.substr(ds, i - ds));
            }
            cur.push_back(t);
            expect_token = false;
            slice_has_token = true;
        } else {
            throw input_error(std::string("diagram word: unexpected '") + c + "' at position " +
                              std::to_string(i));
        }
    }
    finish_slice(text.size());
    // an entirely empty text is the identity of the empty sequence
    if (w.slices.size() == 1 && w.slices[0].empty())
        w.slices.clear();
    for (size_t s = 0; s + 1 < w.slices.size(); ++s) {
        if (slice_cod(w.slices[s]) != slice_dom(w.slices[s + 1]))
            throw input_error("diagram word: slice " + std::to_string(s + 1) + " has domain (" +
                              slice_dom(w.slices[s + 1]) + ") but slice " + std::to_string(s) +
                              " ends in (" + slice_cod(w.slices[s]) + ")");
    }
    if (!w.slices.empty()) {
        w.dom = slice_dom(w.slices.front());
        w.cod = slice_cod(w.slices.back());
    }
    return w;
}

SliceWord identity_word(const SignSeq& s)
{
    SliceWord w;
    w.dom = w.cod = s;
    if (s.empty())
        return w;
    Slice sl;
    for (char c : s)
        sl.push_back({c == '+' ? Tok::ID_UP : Tok::ID_DOWN, 1});
    w.slices.push_back(sl);
    return w;
}

SliceWord stack(const SliceWord& a, const SliceWord& b)
{
    if (a.cod != b.dom)
        throw input_error("cannot stack (" + b.dom + ") on top of (" + a.cod + ")");
    SliceWord w = a;
    w.slices.insert(w.slices.end(), b.slices.begin(), b.slices.end());
    w.cod = b.cod;
    if (a.slices.empty())
        w.dom = b.dom;
    return w;
}

SliceWord juxtapose(const SliceWord& a, const SliceWord& b)
{
    // pad the shorter word with identity slices
    SliceWord w;
    w.dom = a.dom + b.dom;
    w.cod = a.cod + b.cod;
    size_t h = std::max(a.slices.size(), b.slices.size());
    for (size_t i = 0; i < h; ++i) {
        Slice s;
        if (i < a.slices.size())
            s = a.slices[i];
        else
            s = identity_word(a.cod).slices.empty() ? Slice{} : identity_word(a.cod).slices[0];
        const Slice& rb = i < b.slices.size() ? b.slices[i]
                                              : (identity_word(b.cod).slices.empty() ? Slice{}
                                                                                      : identity_word(b.cod).slices[0]);
        s.insert(s.end(), rb.begin(), rb.end());
        w.slices.push_back(s);
    }
    // drop slices that became empty (both sides were the empty object)
    std::vector<Slice> kept;
    for (auto& s : w.slices)
        if (!s.empty())
            kept.push_back(s);
    w.slices = kept;
    return w;
}

} // namespace heis
