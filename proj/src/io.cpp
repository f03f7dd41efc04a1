#include "cmc1/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmc1 {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string obj_string(const SurfaceMesh& mesh, const std::string& config_comment) {
    std::ostringstream os;
    if (!config_comment.empty()) os << "# " << config_comment << "\n";
    for (const auto& v : mesh.vertices)
        os << "v " << fmt_double(v[0]) << " " << fmt_double(v[1]) << " " << fmt_double(v[2])
           << "\n";
    for (const auto& n : mesh.normals)
        os << "vn " << fmt_double(n[0]) << " " << fmt_double(n[1]) << " " << fmt_double(n[2])
           << "\n";
    for (const auto& f : mesh.faces)
        os << "f " << f[0] + 1 << "//" << f[0] + 1 << " " << f[1] + 1 << "//" << f[1] + 1 << " "
           << f[2] + 1 << "//" << f[2] + 1 << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SurfaceMesh read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    SurfaceMesh mesh;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            std::array<double, 3> v{};
            ls >> v[0] >> v[1] >> v[2];
            mesh.vertices.push_back(v);
        } else if (tag == "vn") {
            std::array<double, 3> n{};
            ls >> n[0] >> n[1] >> n[2];
            mesh.normals.push_back(n);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            for (int k = 0; k < 3; ++k) {
                std::string tok;
                ls >> tok;
                f[k] = std::stoi(tok.substr(0, tok.find('/'))) - 1;
                if (f[k] < 0 || f[k] >= static_cast<int>(mesh.vertices.size()))
                    throw std::runtime_error("read_obj: face index out of range in " + path);
            }
            mesh.faces.push_back(f);
        }
    }
    return mesh;
}

}  // namespace cmc1
