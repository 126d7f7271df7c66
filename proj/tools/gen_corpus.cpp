// Writes the bundled models as JSON files into the given directory.

#include "qcgeo/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_corpus <out-dir>\n";
        return 2;
    }
    const std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);
    for (const auto& model : qcgeo::bundled_corpus()) {
        std::ofstream out(dir / (model.name + ".json"), std::ios::binary);
        if (!(out << qcgeo::serialize_model(model))) {
            std::cerr << "cannot write " << model.name << "\n";
            return 2;
        }
    }
    return 0;
}
