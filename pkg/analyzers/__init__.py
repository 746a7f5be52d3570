# analyzers package: network, word and graph analysis
