from surreals.cli import main

main()
