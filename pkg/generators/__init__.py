# generators package: words, network families and fixing words
