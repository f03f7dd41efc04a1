#ifndef CMC1_IO_HPP
#define CMC1_IO_HPP

#include <string>

#include "cmc1/mesh.hpp"

namespace cmc1 {

// 17 significant digits, locale independent; identical inputs print
// identical bytes.
std::string fmt_double(double x);

// v/vn/f records only; config goes into leading comment lines.
std::string obj_string(const SurfaceMesh& mesh, const std::string& config_comment);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Minimal OBJ reader for the records this tool emits.
SurfaceMesh read_obj(const std::string& path);

}  // namespace cmc1

#endif
