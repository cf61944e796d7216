#pragma once

#include <string>

#include <json.hpp>

#include "sft/counting.hpp"
#include "sft/entropy.hpp"
#include "sft/lattice.hpp"
#include "sft/shift.hpp"
#include "sft/systems.hpp"

namespace sft {

using Json = nlohmann::json;

// Lattice literals: {"type":"points","points":[[x,y],...]} or
// {"type":"generator","name":...,"params":{...}}. Generators: rect {m,n},
// square {n}, omega_q {q,n}, omega_q_plus {q,n}, lshape {n}, staircase {n},
// stick {n,v:[x,y],b}.
FiniteLattice lattice_from_json(const Json& j);
Json lattice_to_json(const FiniteLattice& lattice);
// Shorthand "rect:m,n", "square:n", "omega_q:q,n", "omega_q_plus:q,n",
// "lshape:n", "staircase:n", "stick:n,vx,vy,b".
FiniteLattice lattice_from_shorthand(const std::string& text);
// Shorthand, inline JSON, or a path to a JSON file.
FiniteLattice load_lattice(const std::string& arg);

// {"N":2,"name":...,"forbidden":[[[dx,dy,s],...],...]}
SftSpec spec_from_json(const Json& j);
Json spec_to_json(const SftSpec& spec);
// Builtin name, inline JSON, or a path to a JSON file.
SftSpec load_spec(const std::string& arg);

// {"system":"omega_q","q":2} | {"system":"squares"} | {"system":"stick","v":[0,1],"a_target":0.5}
// | {"system":"lshape"} | {"system":"staircase"} | {"system":"rect","w":"n^2","h":"n"}
ExpandingSystem system_from_json(const Json& j);
// Inline JSON, a path to a JSON file, or a bare system name without parameters.
ExpandingSystem load_system(const std::string& arg);

enum class Format { csv, json, plot };

Format parse_format(const std::string& text);

// 12 significant digits.
std::string format_real(double x);
// x rounded to 12 significant digits, so the JSON text round-trips to the printed value.
double round_real(double x);

std::string render_count(const CountResult& r, Format f);
std::string render_table(const RectTable& t, Format f);
std::string render_sequence(const EntropySequence& s, Format f);

}  // namespace sft
