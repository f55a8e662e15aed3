#include <math.h>
#include <stdio.h>
#include <string.h>

#include "relcalc.h"

#define CHECK(cond)                                             \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                 \
    }                                                           \
  } while (0)

int main(void) {
  RcSubspace *m = NULL, *n = NULL, *s = NULL;
  CHECK(rc_subspace_from_json(
            "{\"kind\":\"subspace\",\"version\":\"1\",\"ambient\":2,\"basis\":[[\"1\",\"0\"]]}", &m) ==
        RC_STATUS_OK);
  CHECK(rc_subspace_from_json(
            "{\"kind\":\"subspace\",\"version\":\"1\",\"ambient\":2,\"basis\":[[\"0\",\"1\"]]}", &n) ==
        RC_STATUS_OK);
  CHECK(rc_subspace_from_json(
            "{\"kind\":\"subspace\",\"version\":\"1\",\"ambient\":2,\"basis\":[[\"1\",\"1\"]]}", &s) ==
        RC_STATUS_OK);

  RcRelation *p = NULL;
  CHECK(rc_semi_projection(m, n, &p) == RC_STATUS_OK);
  RcClassification c;
  CHECK(rc_relation_classify(p, &c) == RC_STATUS_OK);
  CHECK(c.idempotent && c.projection);

  RcRelation *bad = NULL;
  CHECK(rc_build_pmns(m, n, s, &bad) == RC_STATUS_PRECONDITION_FAILED);
  CHECK(strstr(rc_last_error(), "ic_violation") != NULL);

  double c0 = 0, cf = 0;
  CHECK(rc_angles(m, s, 1e-9, &c0, &cf) == RC_STATUS_OK);
  CHECK(fabs(c0 - 0.7071067811865476) < 1e-12);

  char *json = NULL;
  CHECK(rc_relation_to_json(p, &json) == RC_STATUS_OK);
  CHECK(strstr(json, "\"relation\"") != NULL);
  rc_string_free(json);

  rc_relation_free(p);
  rc_subspace_free(m);
  rc_subspace_free(n);
  rc_subspace_free(s);
  puts("ok");
  return 0;
}
