#ifndef SNFY_JSON_IO_HPP
#define SNFY_JSON_IO_HPP

#include <json.hpp>

#include "snfy/divisors.hpp"
#include "snfy/operators.hpp"
#include "snfy/partitions.hpp"
#include "snfy/polymat.hpp"
#include "snfy/polyzx.hpp"
#include "snfy/snf_paper.hpp"
#include "snfy/zsnf_oracle.hpp"

namespace snfy {

/// Ordered keys keep output byte-identical across runs.
using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits stay JSON numbers; larger ones become
/// decimal strings so nothing is rounded.
Json json_of(const mpz_class& z);

/// Partition as the array of its parts.
Json json_of(const Partition& p);

/// Polynomial as its coefficient array, lowest degree first; [] is zero.
Json json_of(const PolyZx& p);

/// {dim, n?, order?, entries}; n and order appear when the matrix carries
/// row labels.
Json json_of(const PolyMatrix& m);

Json json_of(const ElementaryOp& op);
Json json_of(const Transcript& t);

/// {input: {n, k, basis, fs}, diagonal, D, P, Q, transcript, verified}
Json json_of(const SnfCertificate& cert);

Json json_of(const SpecializeReport& rep);

/// {n, strings, cardinalities, shape, conjugate}
Json strings_report_json(int n);

/// {n, k, predicted, predicted_factored, initial_multiset, peel_trace,
/// ladder, verdict}
Json conjecture_report_json(const ConjectureDiagonal& predicted, const DivisorLadder& ladder);

}  // namespace snfy

#endif
