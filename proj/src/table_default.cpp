namespace csk {

// Embedded copy of data/invariant_table.json; keep the two in sync
// (test_obstruct compares them).
extern const char* const kDefaultInvariantTableJson = R"json({
  "schema_version": "1",
  "families": {
    "mirror-brieskorn-2-3-6k-1": true,
    "mirror-brieskorn-2-3-5-7": true,
    "connsum-mirror-brieskorn-2-3-5-7": true,
    "connsum-extended-2-3-6k-1": true,
    "connsum-2-3-6k-5-with-poincare": true
  },
  "entries": [
    {
      "y": "mirror-brieskorn(2,3,5)",
      "r_s": "1/120",
      "r_valid_for_all_s": true,
      "gamma": { "1": "1/120", "2": "49/120" },
      "gamma_tail": "inf",
      "l_s": 1,
      "l_k": { "1": 1, "2": 1 },
      "source": "Daemi, Chern-Simons functional and the homology cobordism group"
    }
  ]
})json";

}  // namespace csk
