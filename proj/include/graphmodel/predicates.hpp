#pragma once

#include <vector>

#include "graphmodel/hom.hpp"

namespace graphmodel {

/// component_map(f)[i] is the component of cod(f) containing the image of
/// component i of dom(f). Components are numbered as in connected_components.
std::vector<int> component_map(const Hom& f);

bool components_bijective(const Hom& f);
bool components_injective(const Hom& f);
bool components_surjective(const Hom& f);

/// Every component of dom(f) maps isomorphically onto the component of
/// cod(f) it lands in.
bool componentwise_isomorphism(const Hom& f);

/// The restriction of f between furbished parts. Furbished vertices always
/// map to furbished vertices, so this is a homomorphism.
Hom furbished_restriction(const Hom& f);
bool furbished_isomorphism(const Hom& f);
bool injective_on_furbished(const Hom& f);

/// f maps the isolated vertices of dom(f) bijectively onto those of cod(f).
bool isolated_bijection(const Hom& f);

/// Every non-loop edge of cod(f) is the image of an edge.
bool non_loop_edge_surjective(const Hom& f);
/// Every looped vertex of cod(f) has a looped vertex in its preimage.
bool loops_have_looped_preimage(const Hom& f);
/// Every loop of cod(f) is the image of some edge (the edge may collapse).
bool loops_covered(const Hom& f);

/// f is injective and adjacency in cod(f) between image vertices, loops
/// included, comes from dom(f).
bool edge_reflecting_injection(const Hom& f);
/// No edge of cod(f) joins an image vertex to a vertex outside the image.
bool image_closed(const Hom& f);
/// The image of f is a union of components and f is an isomorphism onto it.
bool is_coproduct_injection(const Hom& f);

/// Every non-loop edge of cod(f) between two image vertices is the image of an edge.
bool no_new_edges_on_image(const Hom& f);
/// Every looped image vertex has a looped preimage.
bool no_new_loops_on_image(const Hom& f);

}  // namespace graphmodel
