#include "omwis/search.hpp"

#include "json.hpp"

#include <ostream>

namespace omwis {

auto Tracer::open(long parent, const std::string &action, std::int64_t credit) -> long
{
    long id = next_++;
    nlohmann::json j{{"node", id}, {"parent", parent}, {"action", action}, {"credit", credit}};
    out_ << j.dump() << '\n';
    return id;
}

} // namespace omwis
