#pragma once

#include <string>

#include "semican/compgraph.hpp"
#include "semican/flags.hpp"
#include "semican/multiseg.hpp"
#include "semican/wordpoly.hpp"

namespace semican {

// Rep <-> {"quiver": name, "dims": [..], "arrows": {id: [["p/q",..],..]}}
std::string rep_to_json(const Rep& x);
Rep rep_from_json(const std::string& text);

// Multisegment <-> [[i,j,mult],..]
std::string multisegment_to_json(const Multisegment& m);
Multisegment multisegment_from_json(const std::string& text);

// TildeDim <-> [[col,level,count],..]
std::string tilde_to_json(const TildeDim& d);
TildeDim tilde_from_json(const std::string& text);

// WordPoly <-> [{"word":[..],"coeff":k},..]
std::string wordpoly_to_json(const WordPoly& p);
WordPoly wordpoly_from_json(const std::string& text);

// Fixture directory: SEMICAN_FIXTURE_DIR if set, else ./fixtures, else the
// path baked in at configure time.
std::string fixture_dir();
std::string read_file(const std::string& path);
std::string fixture_text(const std::string& name);

// rootlist.json: the 240 distinguished roots keyed by ([m,n], rank).
std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>> load_rootlist(const std::string& text);

// g4_edges.json: 1-based vertex pairs.
std::set<std::pair<int, int>> load_edge_fixture(const std::string& text);

std::vector<Multisegment> load_multisegment_list(const std::string& text);

// Module fixtures carry their component multisegment alongside the matrices.
struct ModuleFixture {
    Rep rep;
    Multisegment multisegment;
};
ModuleFixture load_module_fixture(const std::string& text);

}  // namespace semican
