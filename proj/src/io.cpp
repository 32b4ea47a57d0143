#include "bmt/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bmt/gf2.hpp"

namespace bmt::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string clean = raw.substr(0, raw.find('#'));
        std::istringstream ls(clean);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back({no, toks});
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("bmat parse error at line " + std::to_string(line) + ": " + msg);
}

}  // namespace

BinaryMatroid read_bmat(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw std::invalid_argument("bmat parse error: empty input");
    std::size_t at = 0;
    const Line& hdr = lines[at++];
    if (hdr.tokens.size() != 2 || hdr.tokens[0] != "BMATROID" || hdr.tokens[1] != "1")
        fail(hdr.number, "expected header 'BMATROID 1'");
    if (at >= lines.size()) throw std::invalid_argument("bmat parse error: missing size line");
    const Line& size_line = lines[at++];
    if (size_line.tokens.size() != 2) fail(size_line.number, "expected 'n r'");
    std::size_t n, r;
    try {
        n = std::stoul(size_line.tokens[0]);
        r = std::stoul(size_line.tokens[1]);
    } catch (const std::exception&) {
        fail(size_line.number, "n and r must be integers");
    }
    if (n > 64) fail(size_line.number, "ground sets larger than 64 are not supported");
    if (at >= lines.size()) throw std::invalid_argument("bmat parse error: missing label line");
    const Line& label_line = lines[at++];
    if (label_line.tokens.size() != n)
        fail(label_line.number, "expected " + std::to_string(n) + " labels, found " +
                                    std::to_string(label_line.tokens.size()));
    std::vector<std::string> row_strings;
    for (; at < lines.size(); ++at) {
        const Line& l = lines[at];
        if (l.tokens.size() != 1 || l.tokens[0].size() != n)
            fail(l.number, "matrix rows are single 0/1 strings of length " + std::to_string(n));
        for (char c : l.tokens[0])
            if (c != '0' && c != '1') fail(l.number, "matrix rows are strings over {0,1}");
        row_strings.push_back(l.tokens[0]);
    }
    Gf2Matrix mat =
        row_strings.empty() ? Gf2Matrix(0, n) : Gf2Matrix::from_strings(row_strings);
    if (mat.cols != n) throw std::invalid_argument("bmat parse error: column count mismatch");
    if (gf2::rank(mat) != r)
        throw std::invalid_argument("bmat parse error: declared rank " + std::to_string(r) +
                                    " but the matrix has rank " + std::to_string(gf2::rank(mat)));
    BinaryMatroid m(label_line.tokens, mat);
    return m;
}

BinaryMatroid read_bmat_file(const std::string& path) {
    return read_bmat(read_text_file(path));
}

std::string write_bmat(const BinaryMatroid& m) {
    std::ostringstream out;
    out << "BMATROID 1\n";
    out << m.size() << ' ' << m.rank() << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m.label(i);
    out << "\n";
    for (std::size_t i = 0; i < m.rank(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out << (m.matrix().get(i, j) ? '1' : '0');
        out << "\n";
    }
    return out.str();
}

void write_bmat_file(const BinaryMatroid& m, const std::string& path) {
    write_text_file(path, write_bmat(m));
}

std::map<std::string, std::string> read_binding(const std::string& text) {
    std::map<std::string, std::string> out;
    for (const Line& l : significant_lines(text)) {
        if (l.tokens.size() != 2)
            throw std::invalid_argument("binding parse error at line " + std::to_string(l.number) +
                                        ": expected 'variable element'");
        if (!out.emplace(l.tokens[0], l.tokens[1]).second)
            throw std::invalid_argument("binding parse error at line " + std::to_string(l.number) +
                                        ": variable bound twice");
    }
    return out;
}

std::map<std::string, std::string> read_binding_file(const std::string& path) {
    return read_binding(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

}  // namespace bmt::io
