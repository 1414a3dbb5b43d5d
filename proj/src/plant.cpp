#include "pac/plant.hpp"

#include <stdexcept>

namespace pac {

Channel parse_channel(const std::string& name) {
  if (name == "altitude") return Channel::Altitude;
  if (name == "roll") return Channel::Roll;
  if (name == "pitch") return Channel::Pitch;
  throw std::invalid_argument("unknown channel '" + name + "'");
}

std::string to_string(Channel c) {
  switch (c) {
    case Channel::Altitude:
      return "altitude";
    case Channel::Roll:
      return "roll";
    case Channel::Pitch:
      return "pitch";
  }
  return "altitude";
}

double Plant::output(Channel c) const {
  const RigidBodyState& s = state();
  switch (c) {
    case Channel::Altitude:
      return -s.position[2];
    case Channel::Roll:
      return s.attitude[0];
    case Channel::Pitch:
      return s.attitude[1];
  }
  return 0.0;
}

}  // namespace pac
