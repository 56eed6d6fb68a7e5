#pragma once

#include "bpl/threefold.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bpl {

using Json = nlohmann::json;

enum class ConstructionKind { Fibered, Pair, Threefold };

const char* construction_kind_name(ConstructionKind k);

struct Construction {
    ConstructionKind kind = ConstructionKind::Fibered;
    Json spec;
    std::optional<FiberedLagrangian> fibered;
    std::optional<std::pair<FiberedLagrangian, FiberedLagrangian>> pair;
    std::optional<ThreefoldLagrangian> threefold;
    std::vector<std::string> notes;

    friend bool operator==(const Construction&, const Construction&) = default;
};

// Parses JSON text; syntax errors become schema errors carrying line and column.
Json parse_json_text(const std::string& text, const std::string& source);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Builds from a construction spec such as {"kind": "T", "params": {"k": 1, "l": 2, "m": 0}}.
Construction build_from_spec(const Json& spec, bool a3 = false);

Json to_json(const BaseLoop& loop);
Json to_json(const FiberedLagrangian& L);
Json to_json(const ThreefoldLagrangian& T);
Json to_json(const Construction& c);

BaseLoop loop_from_json(const Json& j, const std::string& field);
FiberedLagrangian fibered_from_json(const Json& j, const std::string& field = "fibered");
ThreefoldLagrangian threefold_from_json(const Json& j, const std::string& field = "threefold");
Construction construction_from_json(const Json& j);

// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace bpl
