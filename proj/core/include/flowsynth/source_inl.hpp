#pragma once

#include "flowsynth/errors.hpp"

namespace flowsynth {

template <class T>
const T& SourceTree::get(NodeId id) const {
  const auto* payload = std::get_if<T>(&at(id).payload);
  if (payload == nullptr) {
    throw Error(ErrorCode::RuleMismatch,
                "node " + std::to_string(id) + " has kind " +
                    std::string(source_kind_name(at(id).kind())));
  }
  return *payload;
}

template <class T>
T& SourceTree::get(NodeId id) {
  return const_cast<T&>(std::as_const(*this).get<T>(id));
}

}  // namespace flowsynth
