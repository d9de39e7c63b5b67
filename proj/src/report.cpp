#include "agcb/report.hpp"

namespace agcb {

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["value"] = value;
  if (witness) {
    nlohmann::json w;
    w["A"] = witness->A.to_string();
    w["B"] = witness->B.to_string();
    w["Z"] = witness->Z.to_string();
    w["Aprime"] = witness->A_prime ? nlohmann::json(witness->A_prime->to_string()) : nlohmann::json(nullptr);
    w["Bprime"] = witness->B_prime ? nlohmann::json(witness->B_prime->to_string()) : nlohmann::json(nullptr);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (lambda) j["lambda"] = lambda->to_string();
  if (path) j["path"] = *path;
  j["avoid_set"] = avoid_set.to_string();
  return j;
}

}  // namespace agcb
