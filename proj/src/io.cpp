#include "patrol/io.h"

#include "patrol/error.h"

#include <sstream>

namespace patrol {

Instance parse_instance(std::string_view text) {
    std::vector<PointRequirement> pts;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        auto where = "line " + std::to_string(number) + ": ";
        if (tokens.size() != 2)
            throw Error(ErrorKind::ParseError, where + "expected \"<position> <idleness>\"");
        try {
            pts.push_back({parse_rational(tokens[0]), parse_rational(tokens[1])});
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, where + e.message());
        }
    }
    return Instance(std::move(pts));
}

std::string serialize_instance(const Instance& inst) {
    std::string out;
    for (const auto& p : inst.points()) out += to_string(p.position) + " " + to_string(p.idleness) + "\n";
    return out;
}

}  // namespace patrol
