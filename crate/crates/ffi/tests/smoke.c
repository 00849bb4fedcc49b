/* Binding smoke test: Motzkin tableau, moments -> J-fraction, a suite run. */
#include <stdio.h>
#include <string.h>

#include "jfrac.h"

#define CHECK(call)                                                        \
  do {                                                                     \
    JfracStatus st_ = (call);                                              \
    if (st_ != JFRAC_STATUS_OK) {                                          \
      fprintf(stderr, "%s -> %d: %s\n", #call, (int)st_, jfrac_last_error()); \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  const char *b[] = {"0", "0", "0", "0"};
  const char *l[] = {"1", "1", "1", "1"};
  JfracJFraction *jf = NULL;
  JfracTableau *tab = NULL;
  char *s = NULL;

  CHECK(jfrac_jfraction_new(b, 4, l, 4, &jf));
  CHECK(jfrac_tableau_new(jf, 4, &tab));
  CHECK(jfrac_tableau_get(tab, 0, 4, &s));
  if (strcmp(s, "2") != 0) return 2;
  jfrac_string_free(s);
  jfrac_tableau_free(tab);
  jfrac_jfraction_free(jf);

  const char *mu[] = {"1", "0", "0", "0", "2"};
  if (jfrac_jfraction_from_moments(mu, 5, &jf) != JFRAC_STATUS_NON_REGULAR) return 3;
  if (strlen(jfrac_last_error()) == 0) return 4;

  JfracSuite *suite = NULL;
  size_t total = 0, passed = 0;
  CHECK(jfrac_verify("hermite_*", 128, &suite));
  CHECK(jfrac_suite_counts(suite, &total, &passed));
  jfrac_suite_free(suite);
  if (total != 2 || passed != 2) return 5;

  puts("ok");
  return 0;
}
