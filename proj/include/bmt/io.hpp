#ifndef BMT_IO_HPP
#define BMT_IO_HPP

#include <map>
#include <string>

#include "bmt/matroid.hpp"

namespace bmt::io {

// .bmat format:
//   line 1: BMATROID 1
//   line 2: n r          (element count, rank of the matrix)
//   line 3: n labels
//   then rows of the representation matrix over {0,1}, length n each.
// '#' starts a comment anywhere; blank lines ignored. The matrix need not
// be reduced; the loader reduces it and rejects a rank mismatch.
BinaryMatroid read_bmat(const std::string& text);
BinaryMatroid read_bmat_file(const std::string& path);
std::string write_bmat(const BinaryMatroid& m);
void write_bmat_file(const BinaryMatroid& m, const std::string& path);

// Binding files: one "variable element" pair per line, same comment rules.
std::map<std::string, std::string> read_binding(const std::string& text);
std::map<std::string, std::string> read_binding_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bmt::io

#endif
