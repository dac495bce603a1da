// Canonical JSON for every exported object.
//
// Objects are nlohmann::json with the default std::map backing, so keys come
// out sorted; only integers, booleans, strings and null appear. dump_canonical
// fixes the indentation and the trailing newline so that equal values give
// byte-identical text.
//
// Readers are strict: a missing field or a value of the wrong type throws
// FormatError naming the offending JSON pointer.

#ifndef IGCERT_JSON_IO_HPP_
#define IGCERT_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "igcert/biorder.hpp"
#include "igcert/decomposition.hpp"
#include "igcert/error.hpp"
#include "igcert/green.hpp"
#include "igcert/rewrite.hpp"
#include "igcert/search.hpp"
#include "igcert/semigroup.hpp"
#include "igcert/subgroup.hpp"

namespace igcert {

  //! A JSON document that does not have the expected shape.
  class FormatError : public Error {
   public:
    using Error::Error;
  };

  using json = nlohmann::json;

  std::string dump_canonical(json const& j);

  //! Throws FormatError on a syntax error.
  json parse_json(std::string_view text);

  json to_json(Word const& w);
  json to_json(Transition const& t);
  json to_json(TransitionPath const& p);
  json to_json(Verdict const& v);
  json to_json(GreenWitness const& w);
  json to_json(HWitness const& w);
  json to_json(Decomposition const& d);
  json to_json(PeriodicityCertificate const& pc);
  json to_json(SubgroupCertificate const& c);
  json to_json(BiorderedSet const& E);
  json to_json(std::vector<Relation> const& relations);
  json to_json(Partition const& p);

  Word                   word_from_json(json const& j);
  TransitionPath         path_from_json(json const& j);
  GreenWitness           witness_from_json(json const& j);
  HWitness               h_witness_from_json(json const& j);
  Decomposition          decomposition_from_json(json const& j);
  PeriodicityCertificate periodicity_from_json(json const& j);
  SubgroupCertificate    certificate_from_json(json const& j);

}  // namespace igcert

#endif  // IGCERT_JSON_IO_HPP_
