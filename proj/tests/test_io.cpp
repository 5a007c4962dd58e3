#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chromascope/commands.hpp"
#include "chromascope/families.hpp"
#include "chromascope/graph_io.hpp"

using namespace chromascope;

TEST_CASE("edge list round trip") {
    const auto g = kneser_graph(5, 2);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);
}

TEST_CASE("edge list tolerates comments and blank lines") {
    std::istringstream in("# triangle\n3 3\n\n0 1\n1 2 # closing\n2 0\n");
    CHECK(read_edge_list(in) == complete_graph(3));
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n0 5\n") == 3);
    CHECK(line_of("2 1\n0 1\n1 0\n") == 3);
    CHECK(line_of("3 3\n0 1\n1 2\n") != 0);
    CHECK(line_of("nonsense\n") == 1);
}

TEST_CASE("DIMACS input is one-indexed and folds repeats") {
    std::istringstream in("c sample\np edge 4 4\ne 1 2\ne 2 3\ne 3 2\ne 4 1\n");
    const auto g = read_dimacs(in);
    CHECK(g == Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST_CASE("files are auto-detected") {
    const auto dir = std::filesystem::temp_directory_path() / "chromascope_io_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "g.col");
        f << "p edge 3 2\ne 1 2\ne 2 3\n";
    }
    CHECK(read_graph_file(dir / "g.col") == Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
    write_graph_file(dir / "m4.txt", mycielski_graph(4));
    CHECK(read_graph_file(dir / "m4.txt") == mycielski_graph(4));
    CHECK_THROWS(read_graph_file(dir / "missing.txt"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("gen writes files that load back to the generator output") {
    const auto dir = std::filesystem::temp_directory_path() / "chromascope_gen_test";
    std::filesystem::create_directories(dir);
    cli::cmd_gen("mycielski", {"4"}, dir / "m4.txt");
    CHECK(read_graph_file(dir / "m4.txt") == mycielski_graph(4));
    cli::cmd_gen("kneser", {"5", "2"}, dir / "kg.txt");
    const auto kg = read_graph_file(dir / "kg.txt");
    CHECK(kg.vertex_count() == 10);
    CHECK(kg.edge_count() == 15);
    cli::cmd_gen("zykov", {"3", "2", "1"}, dir / "z");
    const auto fam = zykov_family(3, 2, 1);
    CHECK(read_graph_file(dir / "z.base.txt") == fam.base);
    CHECK(read_graph_file(dir / "z.part1.txt") == fam.parts[0]);
    CHECK(read_graph_file(dir / "z.part2.txt") == fam.parts[1]);
    CHECK_FALSE(std::filesystem::exists(dir / "z.part3.txt"));
    std::filesystem::remove_all(dir);
}
