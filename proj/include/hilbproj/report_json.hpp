#pragma once

#include "hilbproj/genus.hpp"
#include "hilbproj/hilbfiber.hpp"
#include "hilbproj/monodromy.hpp"
#include "hilbproj/moricone.hpp"
#include "hilbproj/projection.hpp"

#include <json.hpp>

namespace hilbproj {

using Json = nlohmann::ordered_json;

// Exact serialization: rationals go out as canonical strings ("3", "-7/2"),
// integers as JSON numbers when they fit in 64 bits and as decimal strings
// otherwise. No floating point anywhere.
Json json_rat(const Rat& q);
Json json_int(const Int& n);

Json fiber_json(const FiberProfile& profile);
Json pencil_json(const PencilReport& report, bool include_disc = false);
Json certificate_json(const GeneralityReport& cert);
Json hilb_json(const FiberProfile& profile, int a);
Json genus_json(int d, int a);
Json genus_data_json(const GenusReport& report);
Json vmrt_json(int d, int a);
Json cone_json(const FamilyParams& params);
Json classify_json();
Json monodromy_json(const WitnessReport& report, int requested_samples);

}  // namespace hilbproj
