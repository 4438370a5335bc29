/* Compiles the public header as C and makes a few calls. */
#include <stdio.h>

#include "gstar/gstar.h"

int main(void) {
  gstar_options options;
  gstar_element* e = NULL;
  char* text = NULL;
  int status;

  gstar_options_default(&options);
  status = gstar_element_parse("t1 @ tb1", &options, &e);
  if (status != GSTAR_OK) {
    fprintf(stderr, "%s: %s\n", gstar_status_name(status), gstar_last_error());
    return 1;
  }
  status = gstar_element_to_text(e, &text);
  if (status != GSTAR_OK) return 1;
  printf("%s\n", text);
  gstar_string_free(text);
  gstar_element_destroy(e);
  return gstar_element_parse("tb2", &options, &e) == GSTAR_PARSE ? 0 : 1;
}
