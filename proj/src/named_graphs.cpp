#include "chromascope/named_graphs.hpp"

#include <charconv>
#include <filesystem>
#include <stdexcept>

#include "chromascope/families.hpp"
#include "chromascope/graph_io.hpp"

namespace chromascope {

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Graph resolve_graph(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return read_graph_file(spec);
    const std::string_view s(spec);
    int a = 0;
    int b = 0;
    if (s == "petersen") return kneser_graph(5, 2);
    if (s == "grotzsch") return mycielski_graph(4);
    if (s.starts_with("KG")) {
        const auto comma = s.find_first_of(",-");
        if (comma != std::string_view::npos && parse_int(s.substr(2, comma - 2), a) &&
            parse_int(s.substr(comma + 1), b))
            return kneser_graph(a, b);
    } else if (s.size() > 1 && parse_int(s.substr(1), a)) {
        switch (s[0]) {
        case 'K': return complete_graph(a);
        case 'C': return cycle_graph(a);
        case 'M': return mycielski_graph(a);
        case 'E': return Graph(a);
        case 'G':
            for (auto& entry : appendix_catalog())
                if (entry.name == spec) return entry.graph;
            break;
        default: break;
        }
    }
    throw std::invalid_argument("\"" + spec +
                                "\" is neither a readable graph file nor a known graph name "
                                "(K<n>, C<n>, M<k>, E<n>, KG<n>,<k>, G1..G10, petersen, grotzsch)");
}

}  // namespace chromascope
