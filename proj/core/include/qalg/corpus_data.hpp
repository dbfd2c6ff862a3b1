#ifndef QALG_CORPUS_DATA_HPP
#define QALG_CORPUS_DATA_HPP

namespace qalg {

// JSON text of the shipped example corpus
const char* embedded_corpus_json();

}  // namespace qalg

#endif
